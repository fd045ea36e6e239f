//! Concrete Euclidean-domain instances and runtime domain selection.

mod gaussian;
mod integers;
mod poly;

pub use gaussian::{GaussInt, GaussianIntegers};
pub use integers::Integers;
pub use poly::{CoefficientField, Fp, Poly, PolyRing, Rationals};

use crate::error::Error;

/// Which instance a selector names.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DomainKind {
    Z,
    GaussianZ,
    PolyOverFp(u64),
    PolyOverQ,
}

impl DomainKind {
    /// Parse a selector string: `"z"`, `"zi"`, `"fp:<p>"`, `"qx"`.
    pub fn parse(selector: &str) -> Result<Self, Error> {
        let s = selector.trim().to_ascii_lowercase();
        match s.as_str() {
            "z" => Ok(DomainKind::Z),
            "zi" => Ok(DomainKind::GaussianZ),
            "qx" => Ok(DomainKind::PolyOverQ),
            _ => match s.strip_prefix("fp:") {
                Some(p) => p
                    .parse::<u64>()
                    .map(DomainKind::PolyOverFp)
                    .map_err(|_| Error::UnknownDomain(selector.to_string())),
                None => Err(Error::UnknownDomain(selector.to_string())),
            },
        }
    }

    pub fn selector(&self) -> String {
        match self {
            DomainKind::Z => "z".to_string(),
            DomainKind::GaussianZ => "zi".to_string(),
            DomainKind::PolyOverFp(p) => format!("fp:{p}"),
            DomainKind::PolyOverQ => "qx".to_string(),
        }
    }
}

/// A runtime-selected domain instance. Use [`crate::with_domain`] to run
/// generic code against the chosen instance.
#[derive(Clone, Debug)]
pub enum AnyDomain {
    Z(Integers),
    Zi(GaussianIntegers),
    Fp(PolyRing<Fp>),
    Qx(PolyRing<Rationals>),
}

impl AnyDomain {
    /// Build the domain handle for a descriptor; validates the modulus for
    /// `fp:<p>`.
    pub fn new(kind: DomainKind) -> Result<Self, Error> {
        Ok(match kind {
            DomainKind::Z => AnyDomain::Z(Integers),
            DomainKind::GaussianZ => AnyDomain::Zi(GaussianIntegers),
            DomainKind::PolyOverFp(p) => AnyDomain::Fp(PolyRing::new(Fp::new(p)?)),
            DomainKind::PolyOverQ => AnyDomain::Qx(PolyRing::new(Rationals)),
        })
    }

    pub fn from_selector(selector: &str) -> Result<Self, Error> {
        Self::new(DomainKind::parse(selector)?)
    }

    pub fn kind(&self) -> DomainKind {
        match self {
            AnyDomain::Z(_) => DomainKind::Z,
            AnyDomain::Zi(_) => DomainKind::GaussianZ,
            AnyDomain::Fp(r) => DomainKind::PolyOverFp(r.field().modulus()),
            AnyDomain::Qx(_) => DomainKind::PolyOverQ,
        }
    }
}

/// Run a generic expression with the concrete instance bound to `$dom`.
#[macro_export]
macro_rules! with_domain {
    ($any:expr, |$dom:ident| $body:expr) => {
        match $any {
            $crate::instances::AnyDomain::Z($dom) => $body,
            $crate::instances::AnyDomain::Zi($dom) => $body,
            $crate::instances::AnyDomain::Fp($dom) => $body,
            $crate::instances::AnyDomain::Qx($dom) => $body,
        }
    };
}
