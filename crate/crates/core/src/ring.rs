//! Group-ring arithmetic with nonnegative integer coefficients, used to check
//! identities `f(G) = f(A_1) .. f(A_k)` where `f(X)` is the sum of the
//! elements of `X`.

use serde::Serialize;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::words::parse_word_at;
use crate::group::GroupTable;
use crate::search::{verify_factorization, Factorization};

/// An element of the group ring: `coeffs[x]` is the coefficient of `x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RingVector {
    pub coeffs: Vec<u32>,
}

impl RingVector {
    pub fn zero(n: usize) -> Self {
        RingVector { coeffs: vec![0; n] }
    }

    /// `f(X)`.
    pub fn indicator(n: usize, set: &ElementSet) -> Self {
        let mut v = Self::zero(n);
        for x in set {
            v.coeffs[x] = 1;
        }
        v
    }

    pub fn support(&self) -> ElementSet {
        self.coeffs.iter().enumerate().filter(|(_, &c)| c > 0).map(|(x, _)| x).collect()
    }

    /// True when every coefficient is 0 or 1.
    pub fn is_indicator(&self) -> bool {
        self.coeffs.iter().all(|&c| c <= 1)
    }

    pub fn add(&self, other: &RingVector) -> Result<RingVector> {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::CoefficientOverflow))
            .collect::<Result<_>>()?;
        Ok(RingVector { coeffs })
    }
}

/// Convolution: the coefficient of `g` is the sum of `u(x) v(y)` over `x y = g`.
pub fn ring_mul(g: &GroupTable, u: &RingVector, v: &RingVector) -> Result<RingVector> {
    let n = g.order();
    let mut out = RingVector::zero(n);
    for (x, &cu) in u.coeffs.iter().enumerate().filter(|(_, &c)| c > 0) {
        for (y, &cv) in v.coeffs.iter().enumerate().filter(|(_, &c)| c > 0) {
            let z = g.mul(x, y);
            let term = cu.checked_mul(cv).ok_or(Error::CoefficientOverflow)?;
            out.coeffs[z] = out.coeffs[z].checked_add(term).ok_or(Error::CoefficientOverflow)?;
        }
    }
    Ok(out)
}

/// A product of 0/1 ring elements, expected to equal `f(G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalProduct {
    pub factors: Vec<RingVector>,
}

impl FormalProduct {
    pub fn from_sets(n: usize, sets: &[ElementSet]) -> Self {
        FormalProduct { factors: sets.iter().map(|s| RingVector::indicator(n, s)).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub holds: bool,
    /// First element whose coefficient is not 1, with that coefficient.
    pub mismatch: Option<(usize, u32)>,
    pub product: RingVector,
}

pub fn verify_identity(g: &GroupTable, p: &FormalProduct) -> Result<IdentityCheck> {
    let n = g.order();
    let mut acc = RingVector::indicator(n, &ElementSet::singleton(0));
    for f in &p.factors {
        acc = ring_mul(g, &acc, f)?;
    }
    let mismatch = acc.coeffs.iter().enumerate().find(|(_, &c)| c != 1).map(|(x, &c)| (x, c));
    Ok(IdentityCheck { holds: mismatch.is_none(), mismatch, product: acc })
}

/// The supports of the factors, when the identity holds.
pub fn identity_to_factorization(g: &GroupTable, p: &FormalProduct) -> Result<Factorization> {
    if p.factors.iter().any(|f| !f.is_indicator()) || !verify_identity(g, p)?.holds {
        return Err(Error::IdentityFails);
    }
    let f = Factorization::new(p.factors.iter().map(|v| v.support()).collect());
    debug_assert!(verify_factorization(g, &f));
    Ok(f)
}

/// Parses an identity file: one factor per line, each a `+`-separated sum of
/// words in the group's named generators, e.g. `e + b*t + a^2*b^2*t^2`.
/// Blank lines and lines starting with `#` are skipped; a factor may be
/// wrapped in parentheses.
pub fn parse_identity(g: &GroupTable, text: &str) -> Result<FormalProduct> {
    let n = g.order();
    let mut factors = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let mut offset = raw.len() - raw.trim_start().len();
        let mut body = body;
        if let Some(inner) = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')) {
            body = inner;
            offset += 1;
        }
        let mut v = RingVector::zero(n);
        for term in body.split('+') {
            let column = offset + 1 + (term.len() - term.trim_start().len());
            let word = parse_word_at(term, line, offset + 1)?;
            offset += term.len() + 1;
            let x = word.eval(g).map_err(|e| match e {
                Error::Parse { message, .. } => Error::Parse { line, column, message },
                other => other,
            })?;
            if v.coeffs[x] == 1 {
                return Err(Error::Parse {
                    line,
                    column,
                    message: format!("monomial `{}` repeats an element", term.trim()),
                });
            }
            v.coeffs[x] = 1;
        }
        factors.push(v);
    }
    Ok(FormalProduct { factors })
}
