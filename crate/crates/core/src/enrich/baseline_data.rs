//! Shipped lookup tables for the baseline tagger.
//!
//! Rows are (surface form, POS tag, lemma). English uses Penn-style tags,
//! French uses TreeTagger-style tags. The tables cover function words plus
//! frequent content words; everything else falls to the suffix rules.

/// English form -> (tag, lemma).
pub const EN_LEXICON: &[(&str, &str, &str)] = &[
    // conjunctions and prepositions (structuration counts CC and IN)
    ("and", "CC", "and"),
    ("but", "CC", "but"),
    ("or", "CC", "or"),
    ("nor", "CC", "nor"),
    ("yet", "CC", "yet"),
    ("plus", "CC", "plus"),
    ("of", "IN", "of"),
    ("in", "IN", "in"),
    ("on", "IN", "on"),
    ("at", "IN", "at"),
    ("by", "IN", "by"),
    ("with", "IN", "with"),
    ("without", "IN", "without"),
    ("for", "IN", "for"),
    ("from", "IN", "from"),
    ("about", "IN", "about"),
    ("against", "IN", "against"),
    ("between", "IN", "between"),
    ("into", "IN", "into"),
    ("through", "IN", "through"),
    ("during", "IN", "during"),
    ("before", "IN", "before"),
    ("after", "IN", "after"),
    ("above", "IN", "above"),
    ("below", "IN", "below"),
    ("under", "IN", "under"),
    ("over", "IN", "over"),
    ("because", "IN", "because"),
    ("if", "IN", "if"),
    ("while", "IN", "while"),
    ("although", "IN", "although"),
    ("though", "IN", "though"),
    ("since", "IN", "since"),
    ("unless", "IN", "unless"),
    ("until", "IN", "until"),
    ("whether", "IN", "whether"),
    ("as", "IN", "as"),
    ("than", "IN", "than"),
    // determiners
    ("the", "DT", "the"),
    ("a", "DT", "a"),
    ("an", "DT", "a"),
    ("this", "DT", "this"),
    ("that", "DT", "that"),
    ("these", "DT", "this"),
    ("those", "DT", "that"),
    ("each", "DT", "each"),
    ("every", "DT", "every"),
    ("some", "DT", "some"),
    ("any", "DT", "any"),
    ("no", "DT", "no"),
    ("all", "DT", "all"),
    ("both", "DT", "both"),
    // pronouns
    ("i", "PRP", "i"),
    ("you", "PRP", "you"),
    ("he", "PRP", "he"),
    ("she", "PRP", "she"),
    ("it", "PRP", "it"),
    ("we", "PRP", "we"),
    ("they", "PRP", "they"),
    ("me", "PRP", "me"),
    ("him", "PRP", "he"),
    ("her", "PRP", "she"),
    ("us", "PRP", "we"),
    ("them", "PRP", "they"),
    ("my", "PRP$", "my"),
    ("your", "PRP$", "your"),
    ("his", "PRP$", "his"),
    ("its", "PRP$", "its"),
    ("our", "PRP$", "our"),
    ("their", "PRP$", "their"),
    ("who", "WP", "who"),
    ("what", "WP", "what"),
    ("which", "WDT", "which"),
    ("when", "WRB", "when"),
    ("where", "WRB", "where"),
    ("why", "WRB", "why"),
    ("how", "WRB", "how"),
    // adverbs, particles
    ("not", "RB", "not"),
    ("n't", "RB", "not"),
    ("never", "RB", "never"),
    ("very", "RB", "very"),
    ("too", "RB", "too"),
    ("so", "RB", "so"),
    ("always", "RB", "always"),
    ("often", "RB", "often"),
    ("really", "RB", "really"),
    ("quite", "RB", "quite"),
    ("almost", "RB", "almost"),
    ("already", "RB", "already"),
    ("still", "RB", "still"),
    ("just", "RB", "just"),
    ("here", "RB", "here"),
    ("there", "RB", "there"),
    ("now", "RB", "now"),
    ("then", "RB", "then"),
    ("well", "RB", "well"),
    ("again", "RB", "again"),
    ("to", "TO", "to"),
    // modals and frequent verbs
    ("will", "MD", "will"),
    ("would", "MD", "would"),
    ("can", "MD", "can"),
    ("could", "MD", "could"),
    ("should", "MD", "should"),
    ("must", "MD", "must"),
    ("may", "MD", "may"),
    ("might", "MD", "might"),
    ("be", "VB", "be"),
    ("is", "VBZ", "be"),
    ("are", "VBP", "be"),
    ("am", "VBP", "be"),
    ("was", "VBD", "be"),
    ("were", "VBD", "be"),
    ("been", "VBN", "be"),
    ("being", "VBG", "be"),
    ("have", "VB", "have"),
    ("has", "VBZ", "have"),
    ("had", "VBD", "have"),
    ("do", "VB", "do"),
    ("does", "VBZ", "do"),
    ("did", "VBD", "do"),
    ("go", "VB", "go"),
    ("goes", "VBZ", "go"),
    ("went", "VBD", "go"),
    ("gone", "VBN", "go"),
    ("get", "VB", "get"),
    ("got", "VBD", "get"),
    ("make", "VB", "make"),
    ("made", "VBD", "make"),
    ("see", "VB", "see"),
    ("saw", "VBD", "see"),
    ("seen", "VBN", "see"),
    ("say", "VB", "say"),
    ("said", "VBD", "say"),
    ("like", "VB", "like"),
    ("love", "VB", "love"),
    ("hate", "VB", "hate"),
    ("want", "VB", "want"),
    ("think", "VB", "think"),
    ("thought", "VBD", "think"),
    ("know", "VB", "know"),
    ("knew", "VBD", "know"),
    ("feel", "VB", "feel"),
    ("felt", "VBD", "feel"),
    ("wait", "VB", "wait"),
    ("play", "VB", "play"),
    ("sing", "VB", "sing"),
    ("sang", "VBD", "sing"),
    // adjectives (descriptivity counts JJ/JJR/JJS)
    ("good", "JJ", "good"),
    ("bad", "JJ", "bad"),
    ("loud", "JJ", "loud"),
    ("quiet", "JJ", "quiet"),
    ("big", "JJ", "big"),
    ("small", "JJ", "small"),
    ("great", "JJ", "great"),
    ("terrible", "JJ", "terrible"),
    ("awful", "JJ", "awful"),
    ("amazing", "JJ", "amazing"),
    ("wonderful", "JJ", "wonderful"),
    ("horrible", "JJ", "horrible"),
    ("beautiful", "JJ", "beautiful"),
    ("ugly", "JJ", "ugly"),
    ("new", "JJ", "new"),
    ("old", "JJ", "old"),
    ("young", "JJ", "young"),
    ("long", "JJ", "long"),
    ("short", "JJ", "short"),
    ("high", "JJ", "high"),
    ("low", "JJ", "low"),
    ("hot", "JJ", "hot"),
    ("cold", "JJ", "cold"),
    ("happy", "JJ", "happy"),
    ("sad", "JJ", "sad"),
    ("angry", "JJ", "angry"),
    ("free", "JJ", "free"),
    ("full", "JJ", "full"),
    ("empty", "JJ", "empty"),
    ("nice", "JJ", "nice"),
    ("fine", "JJ", "fine"),
    ("late", "JJ", "late"),
    ("early", "JJ", "early"),
    ("expensive", "JJ", "expensive"),
    ("cheap", "JJ", "cheap"),
    ("crowded", "JJ", "crowded"),
    ("noisy", "JJ", "noisy"),
    ("perfect", "JJ", "perfect"),
    ("awesome", "JJ", "awesome"),
    ("boring", "JJ", "boring"),
    ("exciting", "JJ", "exciting"),
    ("huge", "JJ", "huge"),
    ("tiny", "JJ", "tiny"),
    ("strong", "JJ", "strong"),
    ("weak", "JJ", "weak"),
    ("dark", "JJ", "dark"),
    ("bright", "JJ", "bright"),
    ("better", "JJR", "good"),
    ("worse", "JJR", "bad"),
    ("best", "JJS", "good"),
    ("worst", "JJS", "bad"),
    // frequent nouns
    ("sound", "NN", "sound"),
    ("music", "NN", "music"),
    ("festival", "NN", "festival"),
    ("concert", "NN", "concert"),
    ("crowd", "NN", "crowd"),
    ("stage", "NN", "stage"),
    ("ticket", "NN", "ticket"),
    ("tickets", "NNS", "ticket"),
    ("price", "NN", "price"),
    ("queue", "NN", "queue"),
    ("night", "NN", "night"),
    ("day", "NN", "day"),
    ("show", "NN", "show"),
    ("band", "NN", "band"),
    ("artist", "NN", "artist"),
    ("film", "NN", "film"),
    ("movie", "NN", "movie"),
    ("people", "NNS", "people"),
    ("city", "NN", "city"),
    ("street", "NN", "street"),
    ("food", "NN", "food"),
    ("drink", "NN", "drink"),
    ("weather", "NN", "weather"),
    ("rain", "NN", "rain"),
    ("sun", "NN", "sun"),
    ("year", "NN", "year"),
    ("time", "NN", "time"),
    ("place", "NN", "place"),
    ("event", "NN", "event"),
    ("line", "NN", "line"),
];

/// French form -> (tag, lemma).
pub const FR_LEXICON: &[(&str, &str, &str)] = &[
    // conjunctions (structuration counts KON)
    ("et", "KON", "et"),
    ("ou", "KON", "ou"),
    ("mais", "KON", "mais"),
    ("donc", "KON", "donc"),
    ("ni", "KON", "ni"),
    ("car", "KON", "car"),
    ("que", "KON", "que"),
    ("qu'", "KON", "que"),
    ("si", "KON", "si"),
    ("quand", "KON", "quand"),
    ("lorsque", "KON", "lorsque"),
    ("puisque", "KON", "puisque"),
    ("parce", "KON", "parce"),
    ("comme", "KON", "comme"),
    ("quoique", "KON", "quoique"),
    // prepositions
    ("à", "PRP", "à"),
    ("de", "PRP", "de"),
    ("d'", "PRP", "de"),
    ("dans", "PRP", "dans"),
    ("sur", "PRP", "sur"),
    ("sous", "PRP", "sous"),
    ("avec", "PRP", "avec"),
    ("sans", "PRP", "sans"),
    ("pour", "PRP", "pour"),
    ("par", "PRP", "par"),
    ("chez", "PRP", "chez"),
    ("vers", "PRP", "vers"),
    ("entre", "PRP", "entre"),
    ("depuis", "PRP", "depuis"),
    ("pendant", "PRP", "pendant"),
    ("avant", "PRP", "avant"),
    ("après", "PRP", "après"),
    ("contre", "PRP", "contre"),
    ("en", "PRP", "en"),
    // determiners
    ("le", "DET", "le"),
    ("la", "DET", "le"),
    ("les", "DET", "le"),
    ("l'", "DET", "le"),
    ("un", "DET", "un"),
    ("une", "DET", "un"),
    ("des", "DET", "du"),
    ("du", "DET", "du"),
    ("au", "DET", "au"),
    ("aux", "DET", "au"),
    ("ce", "DET", "ce"),
    ("cet", "DET", "ce"),
    ("cette", "DET", "ce"),
    ("ces", "DET", "ce"),
    ("mon", "DET", "mon"),
    ("ma", "DET", "mon"),
    ("mes", "DET", "mon"),
    ("ton", "DET", "ton"),
    ("ta", "DET", "ton"),
    ("tes", "DET", "ton"),
    ("son", "DET", "son"),
    ("sa", "DET", "son"),
    ("ses", "DET", "son"),
    ("notre", "DET", "notre"),
    ("nos", "DET", "notre"),
    ("votre", "DET", "votre"),
    ("vos", "DET", "votre"),
    ("leur", "DET", "leur"),
    ("leurs", "DET", "leur"),
    ("chaque", "DET", "chaque"),
    ("tout", "DET", "tout"),
    ("toute", "DET", "tout"),
    ("tous", "DET", "tout"),
    ("toutes", "DET", "tout"),
    ("aucun", "DET", "aucun"),
    ("aucune", "DET", "aucun"),
    // pronouns
    ("je", "PRO", "je"),
    ("j'", "PRO", "je"),
    ("tu", "PRO", "tu"),
    ("il", "PRO", "il"),
    ("elle", "PRO", "elle"),
    ("on", "PRO", "on"),
    ("nous", "PRO", "nous"),
    ("vous", "PRO", "vous"),
    ("ils", "PRO", "il"),
    ("elles", "PRO", "elle"),
    ("moi", "PRO", "moi"),
    ("toi", "PRO", "toi"),
    ("lui", "PRO", "lui"),
    ("eux", "PRO", "eux"),
    ("y", "PRO", "y"),
    ("se", "PRO", "se"),
    ("s'", "PRO", "se"),
    ("qui", "PRO", "qui"),
    ("quoi", "PRO", "quoi"),
    ("dont", "PRO", "dont"),
    ("où", "PRO", "où"),
    ("c'", "PRO", "ce"),
    // adverbs
    ("ne", "ADV", "ne"),
    ("n'", "ADV", "ne"),
    ("pas", "ADV", "pas"),
    ("jamais", "ADV", "jamais"),
    ("très", "ADV", "très"),
    ("trop", "ADV", "trop"),
    ("bien", "ADV", "bien"),
    ("mal", "ADV", "mal"),
    ("plus", "ADV", "plus"),
    ("moins", "ADV", "moins"),
    ("aussi", "ADV", "aussi"),
    ("encore", "ADV", "encore"),
    ("déjà", "ADV", "déjà"),
    ("toujours", "ADV", "toujours"),
    ("souvent", "ADV", "souvent"),
    ("vraiment", "ADV", "vraiment"),
    ("presque", "ADV", "presque"),
    ("ici", "ADV", "ici"),
    ("là", "ADV", "là"),
    ("maintenant", "ADV", "maintenant"),
    ("hier", "ADV", "hier"),
    ("demain", "ADV", "demain"),
    ("aujourd'hui", "ADV", "aujourd'hui"),
    ("peu", "ADV", "peu"),
    ("beaucoup", "ADV", "beaucoup"),
    ("vite", "ADV", "vite"),
    ("ensuite", "ADV", "ensuite"),
    ("enfin", "ADV", "enfin"),
    ("alors", "ADV", "alors"),
    // frequent verbs
    ("être", "VER", "être"),
    ("est", "VER", "être"),
    ("sont", "VER", "être"),
    ("était", "VER", "être"),
    ("étaient", "VER", "être"),
    ("suis", "VER", "être"),
    ("es", "VER", "être"),
    ("sommes", "VER", "être"),
    ("êtes", "VER", "être"),
    ("sera", "VER", "être"),
    ("seront", "VER", "être"),
    ("avoir", "VER", "avoir"),
    ("a", "VER", "avoir"),
    ("ont", "VER", "avoir"),
    ("avait", "VER", "avoir"),
    ("avaient", "VER", "avoir"),
    ("ai", "VER", "avoir"),
    ("avons", "VER", "avoir"),
    ("avez", "VER", "avoir"),
    ("aura", "VER", "avoir"),
    ("aller", "VER", "aller"),
    ("va", "VER", "aller"),
    ("vont", "VER", "aller"),
    ("vais", "VER", "aller"),
    ("allait", "VER", "aller"),
    ("faire", "VER", "faire"),
    ("fait", "VER", "faire"),
    ("font", "VER", "faire"),
    ("faisait", "VER", "faire"),
    ("voir", "VER", "voir"),
    ("vu", "VER", "voir"),
    ("voit", "VER", "voir"),
    ("voient", "VER", "voir"),
    ("dire", "VER", "dire"),
    ("dit", "VER", "dire"),
    ("disent", "VER", "dire"),
    ("aimer", "VER", "aimer"),
    ("aime", "VER", "aimer"),
    ("aiment", "VER", "aimer"),
    ("adorer", "VER", "adorer"),
    ("adore", "VER", "adorer"),
    ("adorent", "VER", "adorer"),
    ("détester", "VER", "détester"),
    ("déteste", "VER", "détester"),
    ("venir", "VER", "venir"),
    ("vient", "VER", "venir"),
    ("viennent", "VER", "venir"),
    ("pouvoir", "VER", "pouvoir"),
    ("peut", "VER", "pouvoir"),
    ("peuvent", "VER", "pouvoir"),
    ("vouloir", "VER", "vouloir"),
    ("veut", "VER", "vouloir"),
    ("veulent", "VER", "vouloir"),
    ("commencer", "VER", "commencer"),
    ("commence", "VER", "commencer"),
    ("attendre", "VER", "attendre"),
    ("attend", "VER", "attendre"),
    // adjectives (descriptivity counts ADJ)
    ("bon", "ADJ", "bon"),
    ("bonne", "ADJ", "bon"),
    ("mauvais", "ADJ", "mauvais"),
    ("mauvaise", "ADJ", "mauvais"),
    ("grand", "ADJ", "grand"),
    ("grande", "ADJ", "grand"),
    ("petit", "ADJ", "petit"),
    ("petite", "ADJ", "petit"),
    ("beau", "ADJ", "beau"),
    ("belle", "ADJ", "beau"),
    ("joli", "ADJ", "joli"),
    ("jolie", "ADJ", "joli"),
    ("magnifique", "ADJ", "magnifique"),
    ("superbe", "ADJ", "superbe"),
    ("super", "ADJ", "super"),
    ("génial", "ADJ", "génial"),
    ("géniale", "ADJ", "génial"),
    ("incroyable", "ADJ", "incroyable"),
    ("horrible", "ADJ", "horrible"),
    ("terrible", "ADJ", "terrible"),
    ("nul", "ADJ", "nul"),
    ("nulle", "ADJ", "nul"),
    ("cher", "ADJ", "cher"),
    ("chère", "ADJ", "cher"),
    ("gratuit", "ADJ", "gratuit"),
    ("gratuite", "ADJ", "gratuit"),
    ("bruyant", "ADJ", "bruyant"),
    ("bruyante", "ADJ", "bruyant"),
    ("fort", "ADJ", "fort"),
    ("forte", "ADJ", "fort"),
    ("long", "ADJ", "long"),
    ("longue", "ADJ", "long"),
    ("court", "ADJ", "court"),
    ("courte", "ADJ", "court"),
    ("nouveau", "ADJ", "nouveau"),
    ("nouvelle", "ADJ", "nouveau"),
    ("vieux", "ADJ", "vieux"),
    ("vieille", "ADJ", "vieux"),
    ("jeune", "ADJ", "jeune"),
    ("meilleur", "ADJ", "meilleur"),
    ("meilleure", "ADJ", "meilleur"),
    ("pire", "ADJ", "pire"),
    ("heureux", "ADJ", "heureux"),
    ("heureuse", "ADJ", "heureux"),
    ("triste", "ADJ", "triste"),
    ("fatigué", "ADJ", "fatigué"),
    ("fatiguée", "ADJ", "fatigué"),
    ("plein", "ADJ", "plein"),
    ("pleine", "ADJ", "plein"),
    ("vide", "ADJ", "vide"),
    ("parfait", "ADJ", "parfait"),
    ("parfaite", "ADJ", "parfait"),
    ("énorme", "ADJ", "énorme"),
    ("libre", "ADJ", "libre"),
    // frequent nouns
    ("festival", "NOM", "festival"),
    ("concert", "NOM", "concert"),
    ("musique", "NOM", "musique"),
    ("foule", "NOM", "foule"),
    ("scène", "NOM", "scène"),
    ("billet", "NOM", "billet"),
    ("billets", "NOM", "billet"),
    ("prix", "NOM", "prix"),
    ("file", "NOM", "file"),
    ("nuit", "NOM", "nuit"),
    ("jour", "NOM", "jour"),
    ("soir", "NOM", "soir"),
    ("spectacle", "NOM", "spectacle"),
    ("groupe", "NOM", "groupe"),
    ("artiste", "NOM", "artiste"),
    ("film", "NOM", "film"),
    ("ville", "NOM", "ville"),
    ("rue", "NOM", "rue"),
    ("nourriture", "NOM", "nourriture"),
    ("boisson", "NOM", "boisson"),
    ("météo", "NOM", "météo"),
    ("pluie", "NOM", "pluie"),
    ("soleil", "NOM", "soleil"),
    ("année", "NOM", "année"),
    ("temps", "NOM", "temps"),
    ("endroit", "NOM", "endroit"),
    ("événement", "NOM", "événement"),
    ("son", "NOM", "son"),
    ("bruit", "NOM", "bruit"),
    ("gens", "NOM", "gens"),
];

/// English suffix rules, tried in order after lexicon lookup and the numeral
/// rule. `(suffix, tag)`.
pub const EN_SUFFIX_RULES: &[(&str, &str)] = &[
    ("ly", "RB"),
    ("ing", "VBG"),
    ("tion", "NN"),
    ("sion", "NN"),
    ("ment", "NN"),
    ("ness", "NN"),
    ("ity", "NN"),
    ("ship", "NN"),
    ("est", "JJS"),
    ("ous", "JJ"),
    ("ful", "JJ"),
    ("ive", "JJ"),
    ("able", "JJ"),
    ("ible", "JJ"),
    ("ish", "JJ"),
    ("ic", "JJ"),
    ("al", "JJ"),
    ("ed", "VBD"),
];

/// French suffix rules, same contract as the English set.
pub const FR_SUFFIX_RULES: &[(&str, &str)] = &[
    ("ment", "ADV"),
    ("tion", "NOM"),
    ("té", "NOM"),
    ("isme", "NOM"),
    ("age", "NOM"),
    ("eux", "ADJ"),
    ("euse", "ADJ"),
    ("ible", "ADJ"),
    ("able", "ADJ"),
    ("ique", "ADJ"),
    ("elle", "ADJ"),
    ("ive", "ADJ"),
    ("ard", "ADJ"),
    ("er", "VER"),
    ("ir", "VER"),
];
