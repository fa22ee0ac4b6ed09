//! A small hand-written multilingual sentence collection, expanded
//! deterministically into a balanced corpus for training and evaluating the
//! language identifier. The train/test split happens at the seed-sentence
//! level, so held-out texts never share a sentence with training data.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const EN_SEEDS: &[&str] = &[
    "The festival opens tomorrow with a concert on the main stage",
    "I missed the last train and had to walk home in the rain",
    "Our team spent the whole afternoon debugging the payment service",
    "She ordered a coffee and read the newspaper by the window",
    "The jury announced the winning film late on Sunday evening",
    "Volunteers handed out water bottles near the festival entrance",
    "He plays bass in a small band that tours every summer",
    "The museum stays open late on Thursdays during the exhibition",
    "Heavy traffic blocked the bridge for almost two hours today",
    "We booked a tiny apartment two streets away from the beach",
    "The mayor promised new bike lanes along the river next year",
    "My neighbor waters his tomatoes every morning before work",
    "The choir rehearses in the old chapel behind the school",
    "Ticket prices doubled since the lineup was announced in March",
    "A cold wind swept through the valley just before sunrise",
    "The bakery on the corner sells out of bread by nine",
    "Students crowded the library during the last week of exams",
    "The film starts with a long shot of an empty harbor",
    "Her latest novel follows three sisters across four decades",
    "Workers repaved the road in front of the concert hall",
    "The orchestra tuned quietly while the lights slowly dimmed",
    "Rain is expected over the coast for most of the weekend",
    "He sold his old records at the flea market on Saturday",
    "The panel discussed streaming rights for nearly an hour",
    "Children chased pigeons across the square after the parade",
    "The kitchen smelled of garlic and fresh rosemary all evening",
    "A power cut silenced the stage for twenty strange minutes",
    "The critics praised the set design but hated the script",
    "Fans queued overnight to catch the first morning screening",
    "The ferry to the island leaves every hour in high season",
    "Local radio broadcast the closing ceremony live from the pier",
    "The drummer broke a stick during the very first song",
    "Organizers moved the opening night indoors because of the storm",
    "She teaches photography at the community center on Tuesdays",
    "The committee rejected the budget after a heated debate",
    "Sparrows nested in the scaffolding above the ticket office",
    "The documentary traces the history of a shipyard in decline",
    "He forgot his badge and argued with security for ten minutes",
    "The brass section rehearsed outside despite the freezing air",
    "Street vendors sold grilled corn along the festival fence",
    "The review called the performance bold and unforgettable",
    "Morning fog delayed every flight out of the small airport",
    "The editor cut the interview down to a single page",
    "They repainted the theater lobby a deep shade of green",
    "A stray dog wandered backstage during the afternoon soundcheck",
    "The closing film won a long and loud standing ovation",
    "Cyclists filled the boulevard before the stage opened at noon",
    "The hotel bar stayed crowded long after the encore ended",
    "Her speech thanked the volunteers who worked without pay",
    "The projector failed twice during the premiere on Friday",
    "Gulls circled the harbor while the crews packed the gear",
    "The festival app crashed the moment tickets went on sale",
    "An usher guided latecomers to the balcony with a flashlight",
    "The quartet played an encore nobody had heard before",
    "Food trucks lined the park from the gate to the fountain",
    "The director answered questions for an hour after the screening",
    "Posters for the jazz night covered every lamppost downtown",
    "The sound engineer balanced the mix during the first chorus",
    "A sudden downpour sent the whole crowd under the awnings",
    "The archive released restored footage of the old parade",
];

pub const FR_SEEDS: &[&str] = &[
    "Le festival ouvre demain avec un concert sur la grande scène",
    "J'ai raté le dernier train et je suis rentré à pied sous la pluie",
    "Notre équipe a passé l'après-midi à corriger le service de paiement",
    "Elle a commandé un café et lu le journal près de la fenêtre",
    "Le jury a annoncé le film gagnant dimanche soir très tard",
    "Des bénévoles distribuaient de l'eau près de l'entrée du festival",
    "Il joue de la basse dans un petit groupe qui tourne chaque été",
    "Le musée reste ouvert tard le jeudi pendant l'exposition",
    "Un embouteillage a bloqué le pont pendant presque deux heures",
    "Nous avons loué un petit appartement à deux rues de la plage",
    "Le maire a promis de nouvelles pistes cyclables le long du fleuve",
    "Mon voisin arrose ses tomates chaque matin avant le travail",
    "La chorale répète dans la vieille chapelle derrière l'école",
    "Le prix des billets a doublé depuis l'annonce de la programmation",
    "Un vent froid a traversé la vallée juste avant le lever du soleil",
    "La boulangerie du coin n'a plus de pain dès neuf heures",
    "Les étudiants remplissaient la bibliothèque pendant la semaine des examens",
    "Le film commence par un long plan d'un port désert",
    "Son dernier roman suit trois sœurs pendant quarante ans",
    "Des ouvriers ont refait la route devant la salle de concert",
    "L'orchestre s'accordait doucement pendant que les lumières baissaient",
    "On attend de la pluie sur la côte pendant presque tout le week-end",
    "Il a vendu ses vieux disques au marché aux puces samedi",
    "La table ronde a discuté des droits de diffusion pendant une heure",
    "Les enfants chassaient les pigeons sur la place après le défilé",
    "La cuisine sentait l'ail et le romarin frais toute la soirée",
    "Une coupure de courant a éteint la scène pendant vingt minutes",
    "Les critiques ont loué les décors mais détesté le scénario",
    "Des fans ont fait la queue toute la nuit pour la première séance",
    "Le bac pour l'île part toutes les heures en haute saison",
    "La radio locale a retransmis la cérémonie de clôture depuis la jetée",
    "Le batteur a cassé une baguette dès la première chanson",
    "Les organisateurs ont déplacé la soirée d'ouverture à cause de l'orage",
    "Elle enseigne la photographie au centre culturel le mardi",
    "Le comité a rejeté le budget après un débat houleux",
    "Des moineaux nichaient dans l'échafaudage au-dessus de la billetterie",
    "Le documentaire retrace l'histoire d'un chantier naval en déclin",
    "Il a oublié son badge et discuté dix minutes avec la sécurité",
    "Les cuivres répétaient dehors malgré l'air glacial",
    "Des vendeurs proposaient du maïs grillé le long des barrières",
    "La critique a décrit le spectacle comme audacieux et inoubliable",
    "Le brouillard du matin a retardé tous les vols du petit aéroport",
    "Le rédacteur a réduit l'entretien à une seule page",
    "Ils ont repeint le hall du théâtre en vert sombre",
    "Un chien errant s'est promené en coulisses pendant les balances",
    "Le film de clôture a reçu une longue ovation debout",
    "Des cyclistes remplissaient le boulevard avant l'ouverture à midi",
    "Le bar de l'hôtel est resté plein longtemps après le rappel",
    "Son discours a remercié les bénévoles qui travaillent sans salaire",
    "Le projecteur est tombé en panne deux fois pendant la première",
    "Des mouettes tournaient au-dessus du port pendant le démontage",
    "L'application du festival a planté dès la mise en vente des billets",
    "Une ouvreuse guidait les retardataires vers le balcon avec une lampe",
    "Le quatuor a joué un rappel que personne ne connaissait",
    "Des camions de cuisine bordaient le parc de la grille à la fontaine",
    "La réalisatrice a répondu aux questions pendant une heure après la séance",
    "Des affiches de la soirée jazz couvraient tous les lampadaires",
    "L'ingénieur du son a réglé la balance pendant le premier refrain",
    "Une averse soudaine a poussé toute la foule sous les auvents",
    "Les archives ont publié des images restaurées du vieux défilé",
];

pub const DE_SEEDS: &[&str] = &[
    "Das Festival beginnt morgen mit einem Konzert auf der großen Bühne",
    "Ich habe den letzten Zug verpasst und bin im Regen nach Hause gelaufen",
    "Der Bäcker an der Ecke verkauft sein Brot schon vor neun Uhr aus",
    "Die Jury gab den Gewinnerfilm erst spät am Sonntagabend bekannt",
    "Schwerer Verkehr blockierte die Brücke fast zwei Stunden lang",
    "Mein Nachbar gießt jeden Morgen vor der Arbeit seine Tomaten",
    "Der Chor probt in der alten Kapelle hinter der Schule",
    "Ein kalter Wind zog kurz vor Sonnenaufgang durch das Tal",
    "Die Studenten füllten die Bibliothek in der letzten Prüfungswoche",
    "Arbeiter erneuerten die Straße vor der Konzerthalle",
    "Der Schlagzeuger zerbrach beim allerersten Lied einen Stock",
    "Die Veranstalter verlegten die Eröffnung wegen des Sturms nach drinnen",
    "Das Komitee lehnte den Haushalt nach einer hitzigen Debatte ab",
    "Die Fähre zur Insel fährt in der Hochsaison jede Stunde",
    "Kinder jagten nach der Parade Tauben über den Platz",
    "Der Dokumentarfilm erzählt die Geschichte einer alten Werft",
    "Ein Stromausfall legte die Bühne zwanzig Minuten lang still",
    "Möwen kreisten über dem Hafen während die Crews packten",
    "Ein plötzlicher Regenguss trieb die Menge unter die Markisen",
    "Das Hotelrestaurant blieb bis lange nach der Zugabe voll",
];

pub const ES_SEEDS: &[&str] = &[
    "El festival empieza mañana con un concierto en el escenario principal",
    "Perdí el último tren y volví a casa caminando bajo la lluvia",
    "La panadería de la esquina se queda sin pan antes de las nueve",
    "El jurado anunció la película ganadora el domingo por la noche",
    "El tráfico bloqueó el puente durante casi dos horas",
    "Mi vecino riega sus tomates cada mañana antes del trabajo",
    "El coro ensaya en la vieja capilla detrás de la escuela",
    "Un viento frío cruzó el valle justo antes del amanecer",
    "Los estudiantes llenaron la biblioteca en la semana de exámenes",
    "Los obreros repavimentaron la calle frente a la sala de conciertos",
    "El baterista rompió una baqueta en la primera canción",
    "Los organizadores trasladaron la apertura por culpa de la tormenta",
    "El comité rechazó el presupuesto tras un debate acalorado",
    "El ferry a la isla sale cada hora en temporada alta",
    "Los niños perseguían palomas por la plaza después del desfile",
    "El documental cuenta la historia de un astillero en declive",
    "Un corte de luz apagó el escenario durante veinte minutos",
    "Las gaviotas volaban sobre el puerto mientras recogían los equipos",
    "Un aguacero repentino empujó a la multitud bajo los toldos",
    "El bar del hotel siguió lleno mucho después del bis",
];

pub const IT_SEEDS: &[&str] = &[
    "Il festival comincia domani con un concerto sul palco principale",
    "Ho perso l'ultimo treno e sono tornato a casa sotto la pioggia",
    "Il fornaio all'angolo finisce il pane prima delle nove",
    "La giuria ha annunciato il film vincitore domenica sera tardi",
    "Il traffico ha bloccato il ponte per quasi due ore",
    "Il mio vicino annaffia i pomodori ogni mattina prima del lavoro",
    "Il coro prova nella vecchia cappella dietro la scuola",
    "Un vento freddo ha attraversato la valle poco prima dell'alba",
    "Gli studenti riempivano la biblioteca nella settimana degli esami",
    "Gli operai hanno rifatto la strada davanti alla sala concerti",
    "Il batterista ha rotto una bacchetta alla prima canzone",
    "Gli organizzatori hanno spostato l'apertura a causa del temporale",
    "Il comitato ha respinto il bilancio dopo un dibattito acceso",
    "Il traghetto per l'isola parte ogni ora in alta stagione",
    "I bambini rincorrevano i piccioni in piazza dopo la sfilata",
    "Il documentario racconta la storia di un cantiere navale in crisi",
    "Un blackout ha spento il palco per venti lunghi minuti",
    "I gabbiani giravano sopra il porto mentre smontavano le casse",
    "Un acquazzone improvviso ha spinto la folla sotto le tende",
    "Il bar dell'albergo è rimasto pieno fino a notte fonda",
];

/// How many seed sentences per class go to the training side.
pub const TRAIN_SEEDS_PER_CLASS: usize = 45;
/// Texts per class after expansion, on each side of the split.
pub const TRAIN_PER_CLASS: usize = 560;
pub const TEST_PER_CLASS: usize = 140;

/// Labeled texts, `(text, class)`, classes en / fr / other.
pub struct DeskCorpus {
    pub train: Vec<(String, &'static str)>,
    pub test: Vec<(String, &'static str)>,
}

/// The "other" class interleaves German, Spanish and Italian so both sides
/// of the split keep all three languages.
fn other_seeds() -> Vec<&'static str> {
    let mut out = Vec::with_capacity(60);
    for i in 0..20 {
        out.push(DE_SEEDS[i]);
        out.push(ES_SEEDS[i]);
        out.push(IT_SEEDS[i]);
    }
    out
}

/// Grows `seeds` to `target` texts: every seed on its own, then ordered
/// pairs of distinct seeds joined with a space, sampled without repetition.
fn expand(seeds: &[&str], target: usize, rng: &mut ChaCha8Rng) -> Vec<String> {
    let mut out: Vec<String> = seeds.iter().map(|s| s.to_string()).collect();
    let n = seeds.len();
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    pairs.shuffle(rng);
    for (i, j) in pairs {
        if out.len() >= target {
            break;
        }
        out.push(format!("{} {}", seeds[i], seeds[j]));
    }
    assert!(out.len() >= target, "not enough seed pairs to reach {target}");
    out.truncate(target);
    out
}

/// Builds the balanced three-class corpus: 560 training and 140 held-out
/// texts per class, split at the seed level before expansion.
pub fn desk_corpus() -> DeskCorpus {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6c616e67);
    let mut train = Vec::new();
    let mut test = Vec::new();
    let others = other_seeds();
    let classes: [(&str, Vec<&'static str>); 3] = [
        ("en", EN_SEEDS.to_vec()),
        ("fr", FR_SEEDS.to_vec()),
        ("other", others),
    ];
    for (class, seeds) in classes {
        assert_eq!(seeds.len(), 60);
        let (train_seeds, test_seeds) = seeds.split_at(TRAIN_SEEDS_PER_CLASS);
        for text in expand(train_seeds, TRAIN_PER_CLASS, &mut rng) {
            train.push((text, class));
        }
        for text in expand(test_seeds, TEST_PER_CLASS, &mut rng) {
            test.push((text, class));
        }
    }
    DeskCorpus { train, test }
}

/// Tab-separated `class<TAB>text` lines for the training side.
pub fn training_tsv(corpus: &DeskCorpus) -> String {
    let mut out = String::new();
    for (text, class) in &corpus.train {
        out.push_str(class);
        out.push('\t');
        out.push_str(text);
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_balanced_and_split_is_disjoint() {
        let c = desk_corpus();
        assert_eq!(c.train.len(), 3 * TRAIN_PER_CLASS);
        assert_eq!(c.test.len(), 3 * TEST_PER_CLASS);
        for class in ["en", "fr", "other"] {
            assert_eq!(c.train.iter().filter(|(_, l)| *l == class).count(), TRAIN_PER_CLASS);
            assert_eq!(c.test.iter().filter(|(_, l)| *l == class).count(), TEST_PER_CLASS);
        }
        // No held-out text reuses a training seed sentence.
        for (text, _) in &c.test {
            for (train_text, _) in &c.train {
                assert_ne!(text, train_text);
            }
            for seeds in [EN_SEEDS, FR_SEEDS] {
                for seed in &seeds[..TRAIN_SEEDS_PER_CLASS] {
                    assert!(!text.contains(seed), "held-out text reuses training seed");
                }
            }
        }
    }

    #[test]
    fn expansion_is_deterministic() {
        let a = desk_corpus();
        let b = desk_corpus();
        assert_eq!(a.train, b.train);
        assert_eq!(a.test, b.test);
    }

    #[test]
    fn training_tsv_shape() {
        let c = desk_corpus();
        let tsv = training_tsv(&c);
        let first = tsv.lines().next().unwrap();
        let (class, text) = first.split_once('\t').unwrap();
        assert_eq!(class, "en");
        assert!(!text.is_empty());
        assert_eq!(tsv.lines().count(), c.train.len());
    }
}
