//! Runs every code snippet in the guide as a doctest, keeping the
//! book and the crate in sync.

#[doc = include_str!("../../../book/src/introduction.md")]
pub struct IntroductionChapter;

#[doc = include_str!("../../../book/src/graphs.md")]
pub struct GraphsChapter;

#[doc = include_str!("../../../book/src/number-theory.md")]
pub struct NumberTheoryChapter;

#[doc = include_str!("../../../book/src/families.md")]
pub struct FamiliesChapter;

#[doc = include_str!("../../../book/src/formations.md")]
pub struct FormationsChapter;

#[doc = include_str!("../../../book/src/decision.md")]
pub struct DecisionChapter;

#[doc = include_str!("../../../book/src/cli.md")]
pub struct CliChapter;
