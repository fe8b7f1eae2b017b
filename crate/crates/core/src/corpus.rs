//! Specification files bundled with the crate, addressable by name.

macro_rules! corpus {
    ($($name:literal),* $(,)?) => {
        /// `(name, JSON text)` for every bundled specification.
        pub const CORPUS: &[(&str, &str)] = &[$(($name, include_str!(concat!("../corpus/", $name, ".json")))),*];
    };
}

corpus!(
    "conic_torus",
    "g2_mod_torus",
    "gl2_mod_normalizer",
    "gl2_mod_torus",
    "gl2r_h_r1",
    "gl2r_h_r2",
    "gl2r_h_r3",
    "gl2r_h_r4",
    "sl2_mod_normalizer",
    "sl2_mod_torus",
    "sl3_mod_normalizer",
    "sl3_mod_torus",
    "sp4_mod_torus",
    "torus_order3",
    "u2_mod_torus",
);

pub fn names() -> impl Iterator<Item = &'static str> {
    CORPUS.iter().map(|(n, _)| *n)
}

/// JSON text of a bundled spec; a trailing `.json` on the name is ignored.
pub fn get(name: &str) -> Option<&'static str> {
    let name = name.strip_suffix(".json").unwrap_or(name);
    CORPUS.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}
