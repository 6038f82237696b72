//! Checker outcomes: axiom identifiers, per-axiom tuple counts, and located
//! failure witnesses.
//!
//! Every checker in the crate is exhaustive over basis tuples. A pass returns
//! the list of axioms verified with the number of tuples scanned; a failure
//! carries the axiom, the basis tuple where it first failed (in deterministic
//! iteration order) and the exact nonzero discrepancy, so fault-injection
//! tests can assert locations.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::cyclotomic::CycScalar;

/// Identifies one axiom family checked by the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    Coassoc,
    Counit,
    Assoc,
    Unit,
    BialgebraDelta,
    BialgebraCounit,
    Antipode,
    AntipodeBijective,
    /// Multiplication quasi-coassociativity constraint (1.1).
    CoquasiCompat,
    /// Unit constraint (1.2).
    CoquasiUnit,
    /// Pentagon constraint (1.3).
    Pentagon,
    /// Associator unit normalization (1.4) and its derived forms.
    OmegaUnit,
    OmegaInvertible,
    /// Quasi-antipode axiom (1.5).
    QuasiAntipodeLeft,
    /// Quasi-antipode axiom (1.6).
    QuasiAntipodeRight,
    /// Quasi-antipode zig-zag (1.7).
    QuasiAntipodeZigzag,
    /// Skew-pairing multiplicativity in the first argument (2.1).
    PairingMultH,
    /// Skew-pairing multiplicativity in the second argument (2.2).
    PairingMultK,
    /// Pairing unit normalization (2.3).
    PairingUnit,
    /// Braided centrality identity (2.4).
    PairingCentral,
    /// Triviality on K x K (2.5).
    PairingOnK,
    /// Descent identity (2.6) and vanishing on the augmentation subspace.
    PairingDescent,
    CointegralLinearity,
    CointegralInvertible,
    CoidealCounit,
    CoidealCoproduct,
    EmbeddingHopfMap,
    EmbeddingInjective,
    SubalgebraCommutative,
    SectionWellDefined,
    QuotientCoalgebraMap,
}

impl Axiom {
    pub fn label(&self) -> &'static str {
        match self {
            Axiom::Coassoc => "coassoc",
            Axiom::Counit => "counit",
            Axiom::Assoc => "assoc",
            Axiom::Unit => "unit",
            Axiom::BialgebraDelta => "bialg-delta",
            Axiom::BialgebraCounit => "bialg-counit",
            Axiom::Antipode => "antipode",
            Axiom::AntipodeBijective => "antipode-bijective",
            Axiom::CoquasiCompat => "(1.1)",
            Axiom::CoquasiUnit => "(1.2)",
            Axiom::Pentagon => "(1.3)",
            Axiom::OmegaUnit => "(1.4)",
            Axiom::OmegaInvertible => "omega-invertible",
            Axiom::QuasiAntipodeLeft => "(1.5)",
            Axiom::QuasiAntipodeRight => "(1.6)",
            Axiom::QuasiAntipodeZigzag => "(1.7)",
            Axiom::PairingMultH => "(2.1)",
            Axiom::PairingMultK => "(2.2)",
            Axiom::PairingUnit => "(2.3)",
            Axiom::PairingCentral => "(2.4)",
            Axiom::PairingOnK => "(2.5)",
            Axiom::PairingDescent => "(2.6)",
            Axiom::CointegralLinearity => "K-linearity",
            Axiom::CointegralInvertible => "convolution-invertible",
            Axiom::CoidealCounit => "coideal-counit",
            Axiom::CoidealCoproduct => "coideal-coproduct",
            Axiom::EmbeddingHopfMap => "embedding-hopf-map",
            Axiom::EmbeddingInjective => "embedding-injective",
            Axiom::SubalgebraCommutative => "subalgebra-commutative",
            Axiom::SectionWellDefined => "section-well-defined",
            Axiom::QuotientCoalgebraMap => "quotient-coalgebra-map",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A located, exact counterexample.
#[derive(Debug, Clone)]
pub struct Witness {
    pub axiom: Axiom,
    /// Basis indices of the tuple where the axiom first failed.
    pub tuple: Vec<usize>,
    /// The nonzero discrepancy (left side minus right side), either a single
    /// scalar or the components of a vector/tensor difference.
    pub discrepancy: Vec<CycScalar>,
    /// Extra context, e.g. which normalization variant failed.
    pub note: String,
}

impl Witness {
    pub fn new(axiom: Axiom, tuple: Vec<usize>, discrepancy: Vec<CycScalar>) -> Self {
        Witness {
            axiom,
            tuple,
            discrepancy,
            note: String::new(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "axiom {} fails at basis tuple (", self.axiom)?;
        for (i, t) in self.tuple.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, "), discrepancy [")?;
        for (i, d) in self.discrepancy.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "]")?;
        if !self.note.is_empty() {
            write!(f, " ({})", self.note)?;
        }
        Ok(())
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Witness {}

/// One verified axiom with the number of basis tuples scanned.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub axiom: Axiom,
    pub tuples: u64,
}

/// The uniform checker result type.
pub type CheckOutcome = Result<Vec<AxiomReport>, Witness>;
