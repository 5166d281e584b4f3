//! Pitch-class arithmetic and the scale/triad catalog.
//!
//! Tones are integers mod 12 with C = 0 and the canonical spellings
//! C, C#, D, Eb, E, F, F#, G, G#, A, Bb, B. The parser also accepts the
//! unicode accidentals and enharmonic spellings (Db, D#, Gb, Ab, A#, ...),
//! normalizing everything to the canonical names.

use alloc::borrow::ToOwned;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// A pitch class, 0..=11.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tone(u8);

pub const TONE_NAMES: [&str; 12] = [
    "C", "C#", "D", "Eb", "E", "F", "F#", "G", "G#", "A", "Bb", "B",
];

impl Tone {
    pub fn new(pc: u8) -> Self {
        assert!(pc < 12, "pitch class out of range: {pc}");
        Tone(pc)
    }

    pub fn pc(self) -> u8 {
        self.0
    }

    pub fn all() -> impl Iterator<Item = Tone> {
        (0..12).map(Tone)
    }

    /// Transposition: `X + n` is the tone `n` semitones above `X`,
    /// with `X + 12m = X`.
    pub fn transpose(self, semitones: i32) -> Tone {
        Tone((self.0 as i32 + semitones).rem_euclid(12) as u8)
    }

    /// Interval from `self` up to `other`, in 0..=11.
    pub fn interval_to(self, other: Tone) -> u8 {
        (other.0 + 12 - self.0) % 12
    }

    pub fn name(self) -> &'static str {
        TONE_NAMES[self.0 as usize]
    }

    /// Parses a tone name. Case-insensitive letter, `#`/`♯` and `b`/`♭`
    /// accidentals (also `x` rejected); enharmonic inputs normalize.
    pub fn parse(s: &str) -> Result<Tone, ToneParseError> {
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(|| ToneParseError(s.to_owned()))?;
        let base = match letter.to_ascii_uppercase() {
            'C' => 0i32,
            'D' => 2,
            'E' => 4,
            'F' => 5,
            'G' => 7,
            'A' => 9,
            'B' => 11,
            _ => return Err(ToneParseError(s.to_owned())),
        };
        let mut shift = 0i32;
        for c in chars {
            match c {
                '#' | '♯' => shift += 1,
                'b' | '♭' => shift -= 1,
                _ => return Err(ToneParseError(s.to_owned())),
            }
        }
        Ok(Tone((base + shift).rem_euclid(12) as u8))
    }
}

impl fmt::Display for Tone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToneParseError(pub String);

impl fmt::Display for ToneParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown tone name: {:?}", self.0)
    }
}

/// A scale shape: ordered semitone offsets from the root, starting at 0.
/// `cyclic` says whether the neighboring condition wraps last → first
/// (chromatic scale, whole tone scales, the Pythagorean chain).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaleTemplate {
    pub name: &'static str,
    pub offsets: Vec<u8>,
    pub cyclic: bool,
}

/// A three-tone shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriadTemplate {
    pub name: &'static str,
    pub offsets: [u8; 3],
}

impl TriadTemplate {
    pub fn tones(&self, root: Tone) -> [Tone; 3] {
        self.offsets.map(|o| root.transpose(o as i32))
    }
}

pub const MAJOR_TRIAD: TriadTemplate = TriadTemplate {
    name: "major-triad",
    offsets: [0, 4, 7],
};
pub const MINOR_TRIAD: TriadTemplate = TriadTemplate {
    name: "minor-triad",
    offsets: [0, 3, 7],
};
/// `(X, X+7, X+10)` — unions of these build the hexatonic minor scale.
pub const HEXATONIC_MINOR_TRIAD: TriadTemplate = TriadTemplate {
    name: "hexatonic-minor-triad",
    offsets: [0, 7, 10],
};
/// `(X, X+7, X+9)` — unions of these build the hexatonic major scale.
pub const HEXATONIC_MAJOR_TRIAD: TriadTemplate = TriadTemplate {
    name: "hexatonic-major-triad",
    offsets: [0, 7, 9],
};

/// A concrete scale: root plus template.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaleInstance {
    pub root: Tone,
    pub template: ScaleTemplate,
}

impl ScaleInstance {
    pub fn new(template: ScaleTemplate, root: Tone) -> Self {
        ScaleInstance { root, template }
    }

    pub fn tones(&self) -> Vec<Tone> {
        self.template
            .offsets
            .iter()
            .map(|&o| self.root.transpose(o as i32))
            .collect()
    }

    pub fn tone_set(&self) -> alloc::collections::BTreeSet<Tone> {
        self.tones().into_iter().collect()
    }

    pub fn transpose(&self, semitones: i32) -> ScaleInstance {
        ScaleInstance {
            root: self.root.transpose(semitones),
            template: self.template.clone(),
        }
    }
}

/// Either kind of catalog entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogEntry {
    Scale(ScaleTemplate),
    Triad(TriadTemplate),
}

fn scale(name: &'static str, offsets: &[u8], cyclic: bool) -> (String, CatalogEntry) {
    (
        name.to_owned(),
        CatalogEntry::Scale(ScaleTemplate {
            name,
            offsets: offsets.to_vec(),
            cyclic,
        }),
    )
}

fn triad(t: TriadTemplate) -> (String, CatalogEntry) {
    (t.name.to_owned(), CatalogEntry::Triad(t))
}

/// The named scale and triad shapes used throughout: the melodic scales are
/// open paths, while the chromatic scale, the whole tone scales and the
/// Pythagorean chain close up (the chain wraps because F + 7 = C).
pub fn catalog() -> BTreeMap<String, CatalogEntry> {
    [
        scale("major", &[0, 2, 4, 5, 7, 9, 11], false),
        scale("minor", &[0, 2, 3, 5, 7, 8, 10], false),
        scale("hexatonic-major", &[0, 2, 4, 5, 7, 9], false),
        scale("hexatonic-minor", &[0, 2, 3, 5, 7, 10], false),
        scale("pentatonic-major", &[0, 2, 4, 7, 9], false),
        scale("pentatonic-minor", &[0, 3, 5, 7, 10], false),
        scale("dorian", &[0, 2, 3, 5, 7, 9, 10], false),
        scale("phrygian", &[0, 1, 3, 5, 7, 8, 10], false),
        scale("lydian", &[0, 2, 4, 6, 7, 9, 11], false),
        scale("mixolydian", &[0, 2, 4, 5, 7, 9, 10], false),
        scale("chromatic", &[0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11], true),
        scale("wholetone", &[0, 2, 4, 6, 8, 10], true),
        scale(
            "pythagorean-chain",
            &[0, 7, 2, 9, 4, 11, 6, 1, 8, 3, 10, 5],
            true,
        ),
        scale("messiaen-0369", &[0, 3, 6, 9], false),
        scale("messiaen-0167", &[0, 1, 6, 7], false),
        scale("messiaen-0268", &[0, 2, 6, 8], false),
        triad(MAJOR_TRIAD),
        triad(MINOR_TRIAD),
        triad(HEXATONIC_MINOR_TRIAD),
        triad(HEXATONIC_MAJOR_TRIAD),
    ]
    .into_iter()
    .collect()
}

pub fn scale_template(name: &str) -> Option<ScaleTemplate> {
    match catalog().remove(name)? {
        CatalogEntry::Scale(t) => Some(t),
        CatalogEntry::Triad(_) => None,
    }
}

/// The four Gregorian mode templates, in the fixed order used by the
/// duality checks.
pub fn gregorian_modes() -> [ScaleTemplate; 4] {
    [
        scale_template("dorian").unwrap(),
        scale_template("phrygian").unwrap(),
        scale_template("lydian").unwrap(),
        scale_template("mixolydian").unwrap(),
    ]
}

/// The whole tone class containing `t`: even pitch classes with C, odd with
/// C#. Exactly these two classes partition the 12 tones.
pub fn whole_tone_class(t: Tone) -> [Tone; 6] {
    let start = t.pc() % 2;
    [0u8, 2, 4, 6, 8, 10].map(|o| Tone::new(start + o))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootMissing;

impl fmt::Display for RootMissing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "root is not a member of the tone set")
    }
}

/// Rearranges a tone set as an ascending scale from `root`.
pub fn ascending_normal_form(
    tones: &alloc::collections::BTreeSet<Tone>,
    root: Tone,
) -> Result<Vec<Tone>, RootMissing> {
    if !tones.contains(&root) {
        return Err(RootMissing);
    }
    let mut offsets: Vec<u8> = tones.iter().map(|&t| root.interval_to(t)).collect();
    offsets.sort_unstable();
    Ok(offsets.into_iter().map(|o| root.transpose(o as i32)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;
    use std::string::ToString;

    fn tones_of(names: &[&str]) -> Vec<Tone> {
        names.iter().map(|n| Tone::parse(n).unwrap()).collect()
    }

    #[test]
    fn names_round_trip_and_enharmonics_normalize() {
        for t in Tone::all() {
            assert_eq!(Tone::parse(t.name()).unwrap(), t);
        }
        assert_eq!(Tone::parse("Db").unwrap().name(), "C#");
        assert_eq!(Tone::parse("D#").unwrap().name(), "Eb");
        assert_eq!(Tone::parse("Gb").unwrap().name(), "F#");
        assert_eq!(Tone::parse("Ab").unwrap().name(), "G#");
        assert_eq!(Tone::parse("A#").unwrap().name(), "Bb");
        assert_eq!(Tone::parse("C♯").unwrap().name(), "C#");
        assert_eq!(Tone::parse("E♭").unwrap().name(), "Eb");
        assert_eq!(Tone::parse("B#").unwrap().name(), "C");
        assert!(Tone::parse("H").is_err());
        assert!(Tone::parse("").is_err());
    }

    #[test]
    fn transposition() {
        let c = Tone::parse("C").unwrap();
        assert_eq!(c.transpose(7).name(), "G");
        assert_eq!(c.transpose(-1).name(), "B");
        // C-major up two semitones is D, E, F#, G, A, B, C#.
        let cmaj = ScaleInstance::new(scale_template("major").unwrap(), c);
        let dmaj = cmaj.transpose(2);
        let names: Vec<_> = dmaj.tones().iter().map(|t| t.name()).collect();
        assert_eq!(names, ["D", "E", "F#", "G", "A", "B", "C#"]);
        // Transposing by 12 is the identity on every catalog template.
        for (_, entry) in catalog() {
            if let CatalogEntry::Scale(t) = entry {
                let s = ScaleInstance::new(t, c);
                assert_eq!(s.transpose(12).tones(), s.tones());
            }
        }
    }

    #[test]
    fn catalog_matches_the_appendix() {
        assert_eq!(
            scale_template("minor").unwrap().offsets,
            [0, 2, 3, 5, 7, 8, 10]
        );
        assert_eq!(
            scale_template("mixolydian").unwrap().offsets,
            [0, 2, 4, 5, 7, 9, 10]
        );
        let chain = ScaleInstance::new(
            scale_template("pythagorean-chain").unwrap(),
            Tone::parse("C").unwrap(),
        );
        let names: Vec<_> = chain.tones().iter().map(|t| t.name()).collect();
        assert_eq!(
            names,
            ["C", "G", "D", "A", "E", "B", "F#", "C#", "G#", "Eb", "Bb", "F"]
        );
        assert_eq!(MAJOR_TRIAD.offsets, [0, 4, 7]);
        assert_eq!(MINOR_TRIAD.offsets, [0, 3, 7]);
        assert_eq!(HEXATONIC_MINOR_TRIAD.offsets, [0, 7, 10]);
        assert_eq!(HEXATONIC_MAJOR_TRIAD.offsets, [0, 7, 9]);
    }

    #[test]
    fn limited_transposition() {
        let c = Tone::new(0);
        let chromatic = ScaleInstance::new(scale_template("chromatic").unwrap(), c);
        for k in 0..12 {
            assert_eq!(chromatic.transpose(k).tone_set(), chromatic.tone_set());
        }
        let wt = ScaleInstance::new(scale_template("wholetone").unwrap(), c);
        for k in 0..12 {
            let same = wt.transpose(k).tone_set() == wt.tone_set();
            assert_eq!(same, k % 2 == 0, "whole tone transposes in 2 ways");
        }
    }

    #[test]
    fn hexatonic_and_pentatonic_unions() {
        for root in Tone::all() {
            let minor_triads: BTreeSet<Tone> = [0, 7, 5]
                .iter()
                .flat_map(|&b| HEXATONIC_MINOR_TRIAD.tones(root.transpose(b)))
                .collect();
            let hex_minor =
                ScaleInstance::new(scale_template("hexatonic-minor").unwrap(), root);
            assert_eq!(minor_triads, hex_minor.tone_set());

            let major_triads: BTreeSet<Tone> = [0, 7, 5]
                .iter()
                .flat_map(|&b| HEXATONIC_MAJOR_TRIAD.tones(root.transpose(b)))
                .collect();
            let hex_major =
                ScaleInstance::new(scale_template("hexatonic-major").unwrap(), root);
            assert_eq!(major_triads, hex_major.tone_set());

            let pent_minor: BTreeSet<Tone> = [0, 5]
                .iter()
                .flat_map(|&b| HEXATONIC_MINOR_TRIAD.tones(root.transpose(b)))
                .collect();
            assert_eq!(
                pent_minor,
                ScaleInstance::new(scale_template("pentatonic-minor").unwrap(), root)
                    .tone_set()
            );

            let pent_major: BTreeSet<Tone> = [0, 7]
                .iter()
                .flat_map(|&b| HEXATONIC_MAJOR_TRIAD.tones(root.transpose(b)))
                .collect();
            assert_eq!(
                pent_major,
                ScaleInstance::new(scale_template("pentatonic-major").unwrap(), root)
                    .tone_set()
            );
        }
    }

    #[test]
    fn major_and_minor_contain_one_tritone_pair() {
        for root in Tone::all() {
            for name in ["major", "minor"] {
                let set =
                    ScaleInstance::new(scale_template(name).unwrap(), root).tone_set();
                let pairs = set
                    .iter()
                    .filter(|&&t| set.contains(&t.transpose(6)) && t.pc() < t.transpose(6).pc())
                    .count();
                assert_eq!(pairs, 1, "{name} at {root} has one tritone pair");
            }
        }
    }

    #[test]
    fn ascending_normal_form_examples() {
        let c = Tone::new(0);
        let set: BTreeSet<Tone> = tones_of(&["C", "G", "E"]).into_iter().collect();
        let asc = ascending_normal_form(&set, c).unwrap();
        assert_eq!(asc.iter().map(|t| t.name()).collect::<Vec<_>>(), ["C", "E", "G"]);

        let set: BTreeSet<Tone> = tones_of(&["C", "G#", "Bb", "Eb", "E", "F", "G"])
            .into_iter()
            .collect();
        let asc = ascending_normal_form(&set, c).unwrap();
        assert_eq!(
            asc.iter().map(|t| t.name()).collect::<Vec<_>>(),
            ["C", "Eb", "E", "F", "G", "G#", "Bb"]
        );

        let single: BTreeSet<Tone> = [c].into_iter().collect();
        assert_eq!(ascending_normal_form(&single, c).unwrap(), vec![c]);

        let set: BTreeSet<Tone> = tones_of(&["D", "E"]).into_iter().collect();
        assert_eq!(ascending_normal_form(&set, c), Err(RootMissing));
    }

    #[test]
    fn whole_tone_classes_partition() {
        let wc = whole_tone_class(Tone::new(0));
        let wcs = whole_tone_class(Tone::new(1));
        let all: BTreeSet<Tone> = wc.iter().chain(wcs.iter()).copied().collect();
        assert_eq!(all.len(), 12);
        assert_eq!(whole_tone_class(Tone::new(4)), wc);
        assert_eq!(
            wcs.map(|t| t.name().to_string()),
            ["C#", "Eb", "F", "G", "A", "B"].map(|s| s.to_string())
        );
    }
}
