use crate::terms::{parse_identity, Identity};

/// What a catalog identity characterises among quasigroups, if anything.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Characterizes {
    GroupIsotope,
    AbelianGroupIsotope,
    /// A defining law of a class (medial, CH, distributive) rather than an
    /// isotopy criterion.
    Law,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatalogEntry {
    pub key: &'static str,
    pub text: &'static str,
    pub meaning: &'static str,
    pub source: &'static str,
    pub characterizes: Characterizes,
}

impl CatalogEntry {
    pub fn identity(&self) -> Identity {
        parse_identity(self.text).expect("catalog identities parse")
    }
}

use Characterizes::*;

// The constant `u` is reserved, so the literature's variable u is written u1.
// Displays with unbalanced parentheses are balanced in the only way that keeps
// their variable sets; two printed forms that are not valid in group isotopes
// carry a one-symbol repair (GROUP_4VAR, AB_GLUKHOV_DIV).
const CATALOG: &[CatalogEntry] = &[
    CatalogEntry {
        key: "GROUP_5VAR",
        text: "x*(y\\((z/u1)*v)) = ((x*(y\\z))/u1)*v",
        meaning: "isotopic to a group",
        source: "Belousov, five variables",
        characterizes: GroupIsotope,
    },
    CatalogEntry {
        key: "GROUP_4VAR",
        text: "((x*(u1\\y))/u1)*z = x*(u1\\((y/u1)*z))",
        meaning: "isotopic to a group",
        source: "Sokhatsky, four variables",
        characterizes: GroupIsotope,
    },
    CatalogEntry {
        key: "AB_BELOUSOV",
        text: "x\\(y*(u1\\v)) = u1\\(y*(x\\v))",
        meaning: "isotopic to an abelian group",
        source: "Belousov, four variables",
        characterizes: AbelianGroupIsotope,
    },
    CatalogEntry {
        key: "AB_SYM",
        text: "((u1/v)*x)/y = ((u1/y)*x)/v",
        meaning: "isotopic to an abelian group",
        source: "right-division mirror of Belousov's identity",
        characterizes: AbelianGroupIsotope,
    },
    CatalogEntry {
        key: "AB_N1",
        text: "(x/u1)*(v\\y) = (y/u1)*(v\\x)",
        meaning: "isotopic to an abelian group (nilpotent class 1)",
        source: "quasicommutator criterion, n = 1",
        characterizes: AbelianGroupIsotope,
    },
    CatalogEntry {
        key: "AB_GLUKHOV_DIV",
        text: "((x/y)*u1)/v = ((x/v)*u1)/y",
        meaning: "isotopic to an abelian group",
        source: "Glukhov, division form",
        characterizes: AbelianGroupIsotope,
    },
    CatalogEntry {
        key: "AB_GLUKHOV_MUL",
        text: "x*(y\\(u1*v)) = u1*(y\\(x*v))",
        meaning: "isotopic to an abelian group",
        source: "Glukhov, multiplication form",
        characterizes: AbelianGroupIsotope,
    },
    CatalogEntry {
        key: "AB_DRAPAL",
        text: "((x*y)/u1)*v = ((x*v)/u1)*y",
        meaning: "isotopic to an abelian group",
        source: "Drapal",
        characterizes: AbelianGroupIsotope,
    },
    CatalogEntry {
        key: "AB_T22_a",
        text: "(x/u1)*(v\\(y*z)) = ((y*(v\\x))/u1)*z",
        meaning: "isotopic to an abelian group",
        source: "five-variable criteria, first form",
        characterizes: AbelianGroupIsotope,
    },
    CatalogEntry {
        key: "AB_T22_b",
        text: "(x/u1)*(v\\(y*(v\\z))) = (z/u1)*(v\\(y*(v\\x)))",
        meaning: "isotopic to an abelian group",
        source: "five-variable criteria, second form",
        characterizes: AbelianGroupIsotope,
    },
    CatalogEntry {
        key: "AB_T22_c",
        text: "(x/u1)*(v\\(y*z)) = ((y*z)/u1)*(v\\x)",
        meaning: "isotopic to an abelian group",
        source: "five-variable criteria, third form",
        characterizes: AbelianGroupIsotope,
    },
    CatalogEntry {
        key: "AB_T22_d",
        text: "x*(v\\((y/u1)*z)) = ((x*z)/u1)*(v\\y)",
        meaning: "isotopic to an abelian group",
        source: "five-variable criteria, fourth form",
        characterizes: AbelianGroupIsotope,
    },
    CatalogEntry {
        key: "AB_T22_e",
        text: "x*(v\\((y/u1)*(v\\z))) = (z/u1)*(v\\(x*(v\\y)))",
        meaning: "isotopic to an abelian group",
        source: "five-variable criteria, fifth form",
        characterizes: AbelianGroupIsotope,
    },
    CatalogEntry {
        key: "MEDIAL",
        text: "(x*y)*(z*w) = (x*z)*(y*w)",
        meaning: "medial",
        source: "mediality",
        characterizes: Law,
    },
    CatalogEntry {
        key: "CH_COMM",
        text: "x*y = y*x",
        meaning: "commutative (CH-quasigroup law)",
        source: "Manin",
        characterizes: Law,
    },
    CatalogEntry {
        key: "CH_INV",
        text: "x*(x*y) = y",
        meaning: "left symmetric (CH-quasigroup law)",
        source: "Manin",
        characterizes: Law,
    },
    CatalogEntry {
        key: "LEFT_DISTRIB",
        text: "x*(y*z) = (x*y)*(x*z)",
        meaning: "left distributive",
        source: "Stein, Belousov-Onoi",
        characterizes: Law,
    },
    CatalogEntry {
        key: "RIGHT_DISTRIB",
        text: "(x*y)*z = (x*z)*(y*z)",
        meaning: "right distributive",
        source: "Belousov",
        characterizes: Law,
    },
];

pub fn catalog() -> &'static [CatalogEntry] {
    CATALOG
}

pub fn catalog_entry(key: &str) -> Option<&'static CatalogEntry> {
    CATALOG.iter().find(|e| e.key == key)
}

/// Keys of the eleven identities characterising abelian-group isotopes.
pub fn abelian_keys() -> impl Iterator<Item = &'static str> {
    CATALOG
        .iter()
        .filter(|e| e.characterizes == AbelianGroupIsotope)
        .map(|e| e.key)
}

pub fn group_keys() -> impl Iterator<Item = &'static str> {
    CATALOG
        .iter()
        .filter(|e| e.characterizes == GroupIsotope)
        .map(|e| e.key)
}
