#[doc = include_str!("../../../book/src/introduction.md")]
pub struct Introduction;

#[doc = include_str!("../../../book/src/polyhedra.md")]
pub struct Polyhedra;

#[doc = include_str!("../../../book/src/complexes.md")]
pub struct Complexes;

#[doc = include_str!("../../../book/src/tropical.md")]
pub struct Tropical;

#[doc = include_str!("../../../book/src/maps.md")]
pub struct Maps;

#[doc = include_str!("../../../book/src/slicing.md")]
pub struct Slicing;

#[doc = include_str!("../../../book/src/cli.md")]
pub struct Cli;
