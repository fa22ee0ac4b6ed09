//! Tweet text normalization.
//!
//! Normalization deletes configurable entity classes and always strips the
//! `#` hashtag marker while keeping the tag body. Deleted spans are replaced
//! by a space so surrounding fragments never merge into new entities, then
//! whitespace runs collapse to single spaces and the ends are trimmed. The
//! result is idempotent: normalizing a normalized text is a no-op.
//!
//! Entity patterns, fixed by policy:
//! - URL: `scheme://` followed by non-space characters, or `www.` followed by
//!   non-space characters.
//! - Mention: `@` followed by word characters, wherever it occurs. E-mail
//!   addresses lose their domain part; the corpus guarantee that no mention
//!   pattern survives outweighs that corner case.
//! - Emoji: any run of code points from the block list in [`EMOJI_RANGES`].
//! - Smiley: ASCII emoticons from [`SMILEYS`], delimited on the right by
//!   whitespace, end of text, or another smiley; letter-initial smileys
//!   ("xD") additionally require whitespace or start of text on the left.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use regex::Regex;

use crate::corpus::{EntityKind, NormalizedTweet, RawTweet};

/// Which entity classes [`normalize`] deletes. Defaults to all of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(default)]
pub struct NormalizeConfig {
    pub url: bool,
    pub mention: bool,
    pub emoji: bool,
    pub smiley: bool,
}

impl Default for NormalizeConfig {
    fn default() -> Self {
        NormalizeConfig { url: true, mention: true, emoji: true, smiley: true }
    }
}

impl NormalizeConfig {
    pub fn none() -> Self {
        NormalizeConfig { url: false, mention: false, emoji: false, smiley: false }
    }
}

/// Unicode ranges treated as emoji, including joiners and modifiers so that
/// multi-code-point sequences disappear as one unit.
pub const EMOJI_RANGES: &[(u32, u32)] = &[
    (0x200D, 0x200D),   // zero-width joiner
    (0x20E3, 0x20E3),   // combining enclosing keycap
    (0x2600, 0x26FF),   // miscellaneous symbols
    (0x2700, 0x27BF),   // dingbats
    (0x2B00, 0x2BFF),   // arrows, stars
    (0xFE00, 0xFE0F),   // variation selectors
    (0x1F000, 0x1F0FF), // mahjong, dominoes, cards
    (0x1F1E6, 0x1F1FF), // regional indicators
    (0x1F300, 0x1F5FF), // symbols and pictographs, skin-tone modifiers
    (0x1F600, 0x1F64F), // emoticons
    (0x1F680, 0x1F6FF), // transport and map
    (0x1F900, 0x1F9FF), // supplemental symbols
    (0x1FA70, 0x1FAFF), // symbols extended-A
];

/// ASCII emoticons recognized as smileys. Matching tries longer entries
/// first.
pub const SMILEYS: &[&str] = &[
    ":'-(", ":-)", ":-(", ";-)", ";-(", ":-D", ":-P", ":-p", ":-/", ":-\\",
    ":-|", ":-O", ":-o", ":')", ":'(", "^_^", "o_O", "O_o", "-_-", "T_T",
    "</3", "=D", "=P", "=)", "=(", ":)", ":(", ";)", ";D", ":D", ":P", ":p",
    ":/", ":\\", ":|", ":O", ":o", ":3", "<3", "xD", "XD", "^^",
];

fn url_re() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| {
        Regex::new(r"(?i)\b[a-z][a-z0-9+.\-]*://\S+|\bwww\.\S+").unwrap()
    })
}

fn mention_re() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"@\w+").unwrap())
}

fn is_emoji(c: char) -> bool {
    let cp = c as u32;
    EMOJI_RANGES.iter().any(|&(lo, hi)| (lo..=hi).contains(&cp))
}

fn remove_urls(text: &str) -> (String, u32) {
    let mut count = 0;
    let out = url_re()
        .replace_all(text, |_: &regex::Captures| {
            count += 1;
            " "
        })
        .into_owned();
    (out, count)
}

fn remove_mentions(text: &str) -> (String, u32) {
    let mut count = 0;
    let out = mention_re()
        .replace_all(text, |_: &regex::Captures| {
            count += 1;
            " "
        })
        .into_owned();
    (out, count)
}

fn remove_emoji(text: &str) -> (String, u32) {
    let mut out = String::with_capacity(text.len());
    let mut count = 0;
    let mut in_run = false;
    for c in text.chars() {
        if is_emoji(c) {
            if !in_run {
                count += 1;
                out.push(' ');
                in_run = true;
            }
        } else {
            in_run = false;
            out.push(c);
        }
    }
    (out, count)
}

fn smiley_at(text: &str, pos: usize) -> Option<&'static str> {
    SMILEYS.iter().copied().find(|s| text[pos..].starts_with(s))
}

fn remove_smileys(text: &str) -> (String, u32) {
    let mut out = String::with_capacity(text.len());
    let mut count = 0;
    let mut pos = 0;
    // Left context of the current position in the *output*: replacements
    // count as whitespace.
    let mut prev: Option<char> = None;
    while pos < text.len() {
        if let Some(sm) = smiley_at(text, pos) {
            let left_ok = match prev {
                None => true,
                Some(p) if p.is_whitespace() => true,
                // Letter-initial smileys ("xD") must not eat word suffixes.
                Some(_) => !sm.chars().next().unwrap().is_alphanumeric(),
            };
            let end = pos + sm.len();
            let right_ok = end == text.len()
                || text[end..].chars().next().is_some_and(char::is_whitespace)
                || smiley_at(text, end).is_some();
            if left_ok && right_ok {
                out.push(' ');
                count += 1;
                prev = Some(' ');
                pos = end;
                continue;
            }
        }
        let c = text[pos..].chars().next().unwrap();
        out.push(c);
        prev = Some(c);
        pos += c.len_utf8();
    }
    (out, count)
}

/// Normalizes one text: removes flagged entities, strips `#`, collapses
/// whitespace. Returns the text and per-kind removal counts (always all four
/// keys).
pub fn normalize_text(text: &str, cfg: &NormalizeConfig) -> (String, BTreeMap<EntityKind, u32>) {
    let mut removed: BTreeMap<EntityKind, u32> =
        EntityKind::ALL.iter().map(|&k| (k, 0)).collect();
    let mut work = text.to_string();
    if cfg.url {
        let (t, n) = remove_urls(&work);
        work = t;
        removed.insert(EntityKind::Url, n);
    }
    if cfg.mention {
        let (t, n) = remove_mentions(&work);
        work = t;
        removed.insert(EntityKind::Mention, n);
    }
    if cfg.emoji {
        let (t, n) = remove_emoji(&work);
        work = t;
        removed.insert(EntityKind::Emoji, n);
    }
    // The hashtag marker always goes; the body stays as a plain word. A space
    // keeps neighbours apart and collapses away below. This runs before the
    // smiley pass: smileys are delimiter-sensitive, so a later '#' removal
    // would unblock matches a single pass had already rejected.
    work = work.replace('#', " ");
    if cfg.smiley {
        let (t, n) = remove_smileys(&work);
        work = t;
        removed.insert(EntityKind::Smiley, n);
    }
    let collapsed = work.split_whitespace().collect::<Vec<_>>().join(" ");
    (collapsed, removed)
}

/// Normalizes a raw tweet into a [`NormalizedTweet`], preserving the original
/// text and any carried-through optional fields.
pub fn normalize(tweet: &RawTweet, cfg: &NormalizeConfig) -> NormalizedTweet {
    let (normalized_text, removed) = normalize_text(&tweet.text, cfg);
    NormalizedTweet {
        id: tweet.id.clone(),
        author: tweet.author.clone(),
        original_text: tweet.text.clone(),
        normalized_text,
        removed,
        lang_hint: tweet.lang_hint.clone(),
        timestamp: tweet.timestamp.clone(),
        subjectivity: tweet.subjectivity,
        polarity: tweet.polarity,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn norm(text: &str) -> (String, BTreeMap<EntityKind, u32>) {
        normalize_text(text, &NormalizeConfig::default())
    }

    #[test]
    fn strips_hashtag_marker_keeps_body() {
        let (t, removed) = norm("The sound is too loud! #FestivalCannes");
        assert_eq!(t, "The sound is too loud! FestivalCannes");
        assert!(removed.values().all(|&v| v == 0));
    }

    #[test]
    fn removes_mention_and_url_with_counts() {
        let (t, removed) = norm("@alice see http://t.co/x now");
        assert_eq!(t, "see now");
        assert_eq!(removed[&EntityKind::Mention], 1);
        assert_eq!(removed[&EntityKind::Url], 1);
        assert_eq!(removed[&EntityKind::Emoji], 0);
        assert_eq!(removed[&EntityKind::Smiley], 0);
    }

    #[test]
    fn plain_words_pass_unchanged() {
        let (t, removed) = norm("plain words only");
        assert_eq!(t, "plain words only");
        assert!(removed.values().all(|&v| v == 0));
    }

    #[test]
    fn www_counts_as_url() {
        let (t, removed) = norm("go to www.example.com today");
        assert_eq!(t, "go to today");
        assert_eq!(removed[&EntityKind::Url], 1);
    }

    #[test]
    fn mention_pattern_is_deleted_even_inside_emails() {
        // No '@'+word substring may survive, so the domain goes too.
        let (t, removed) = norm("mail me at bob@example.org");
        assert_eq!(t, "mail me at bob .org");
        assert_eq!(removed[&EntityKind::Mention], 1);
    }

    #[test]
    fn adjacent_mentions_all_go_in_one_pass() {
        let (t, removed) = norm("@a@b cc @d");
        assert_eq!(t, "cc");
        assert_eq!(removed[&EntityKind::Mention], 3);
    }

    #[test]
    fn emoji_runs_count_once() {
        let (t, removed) = norm("great 😀😀 show 🎉");
        assert_eq!(t, "great show");
        assert_eq!(removed[&EntityKind::Emoji], 2);
    }

    #[test]
    fn zwj_sequences_vanish_entirely() {
        let (t, _) = norm("crew 👩\u{200D}🚀 ready");
        assert_eq!(t, "crew ready");
    }

    #[test]
    fn smileys_are_removed_when_delimited() {
        let (t, removed) = norm("loved it :) really :-D");
        assert_eq!(t, "loved it really");
        assert_eq!(removed[&EntityKind::Smiley], 2);
    }

    #[test]
    fn smiley_glued_to_word_is_removed() {
        let (t, _) = norm("amazing:)");
        assert_eq!(t, "amazing");
    }

    #[test]
    fn smiley_against_hash_marker_is_removed() {
        // '#' strips to a space first, so it cannot shield the smiley.
        let (t, removed) = norm(":D#wow");
        assert_eq!(t, "wow");
        assert_eq!(removed[&EntityKind::Smiley], 1);
    }

    #[test]
    fn letter_initial_smiley_needs_left_boundary() {
        let (t, _) = norm("fixD xD");
        assert_eq!(t, "fixD");
    }

    #[test]
    fn url_survives_smiley_pass_when_urls_kept() {
        let cfg = NormalizeConfig { url: false, ..NormalizeConfig::default() };
        let (t, removed) = normalize_text("see http://x.co/y", &cfg);
        assert_eq!(t, "see http://x.co/y");
        assert_eq!(removed[&EntityKind::Smiley], 0);
    }

    #[test]
    fn disabled_kinds_are_preserved() {
        let cfg = NormalizeConfig::none();
        let (t, removed) = normalize_text("@alice :) http://x.co 😀 #tag", &cfg);
        assert_eq!(t, "@alice :) http://x.co 😀 tag");
        assert!(removed.values().all(|&v| v == 0));
    }

    #[test]
    fn whitespace_collapses_and_trims() {
        let (t, _) = norm("  a \t b \n c  ");
        assert_eq!(t, "a b c");
    }

    #[test]
    fn normalization_can_empty_a_tweet() {
        let (t, removed) = norm("@bob http://x.co 😀");
        assert_eq!(t, "");
        assert_eq!(removed[&EntityKind::Mention], 1);
        assert_eq!(removed[&EntityKind::Url], 1);
        assert_eq!(removed[&EntityKind::Emoji], 1);
    }

    #[test]
    fn no_hash_marker_survives() {
        let (t, _) = norm("odd#case #two ## C#");
        assert!(!t.contains('#'));
        assert_eq!(t, "odd case two C");
    }

    #[test]
    fn idempotent_on_handpicked_edge_cases() {
        let cases = [
            "The sound is too loud! #FestivalCannes",
            "@alice see http://t.co/x now",
            "http#://sneaky",
            "@x.www.y z",
            "a#b c#d http://e.f @g 😀:) xD",
            "mail bob@example.org www.site.org",
            ":-:) :)) half:smile",
        ];
        let cfg = NormalizeConfig::default();
        for c in cases {
            let (once, _) = normalize_text(c, &cfg);
            let (twice, removed) = normalize_text(&once, &cfg);
            assert_eq!(once, twice, "not idempotent for {c:?}");
            assert!(removed.values().all(|&v| v == 0), "second pass removed entities for {c:?}");
        }
    }
}
