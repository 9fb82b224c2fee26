//! Gamma expansions, the symmetric decomposition `f = a + x b`, and the
//! positivity certificates built on them.
//!
//! The center parameter `n` is always passed explicitly. For the descent
//! polynomial of an `m`-letter multiset the natural choice is `n = m`, which
//! can exceed `deg f`.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::macmahon::binomial;
use crate::multiset::MultisetSpec;
use crate::poly::{rat, BiPoly, Rational, UniPoly};

/// Coefficients of `f = sum_k gamma_k x^k (1+x)^(n-2k)`, `k = 0..=n/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaVector {
    pub n: u32,
    pub gammas: Vec<Rational>,
}

impl GammaVector {
    pub fn zero(n: u32) -> Self {
        GammaVector {
            n,
            gammas: vec![Rational::zero(); n as usize / 2 + 1],
        }
    }

    pub fn from_ints(n: u32, gammas: &[i64]) -> Self {
        let mut v = GammaVector::zero(n);
        for (slot, &g) in v.gammas.iter_mut().zip(gammas) {
            *slot = rat(g);
        }
        assert!(
            gammas.len() <= v.gammas.len(),
            "too many gamma coefficients for n = {n}"
        );
        v
    }

    pub fn get(&self, k: usize) -> Rational {
        self.gammas.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.gammas.iter().all(|g| !g.is_negative())
    }

    pub fn is_zero(&self) -> bool {
        self.gammas.iter().all(Zero::is_zero)
    }

    pub fn reconstruct(&self) -> UniPoly {
        let mut acc = UniPoly::zero();
        for (k, g) in self.gammas.iter().enumerate() {
            if !g.is_zero() {
                acc = &acc + &gamma_basis(k as u32, self.n).scale(g);
            }
        }
        acc
    }

    /// `sum_k gamma_k (xy)^k (x+y)^(n-2k)`.
    pub fn reconstruct_bivariate(&self) -> BiPoly {
        self.reconstruct()
            .homogenize(self.n)
            .expect("gamma basis has degree <= n")
    }
}

impl Serialize for GammaVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            n: u32,
            gammas: Vec<String>,
        }
        Repr {
            n: self.n,
            gammas: self.gammas.iter().map(Rational::to_string).collect(),
        }
        .serialize(s)
    }
}

/// `x^k (1+x)^(n-2k)`.
fn gamma_basis(k: u32, n: u32) -> UniPoly {
    let e = n - 2 * k;
    UniPoly::from_sparse((0..=e).map(|i| (i + k, Rational::from_integer(binomial(e, i).into()))))
}

fn check_degree(f: &UniPoly, n: u32) -> Result<()> {
    match f.degree() {
        Some(d) if d > n => Err(Error::DegreeExceedsN { degree: d, n }),
        _ => Ok(()),
    }
}

/// Peels `gamma_k x^k (1+x)^(n-2k)` off for `k = 0, 1, ...`; the residual
/// vanishes exactly when `f` is symmetric about `n/2`. Negative gammas are
/// returned as they are.
pub fn gamma_expansion(f: &UniPoly, n: u32) -> Result<GammaVector> {
    check_degree(f, n)?;
    let mut residual = f.clone();
    let mut out = GammaVector::zero(n);
    for k in 0..=n / 2 {
        let g = residual.coeff(k);
        if !g.is_zero() {
            residual = &residual - &gamma_basis(k, n).scale(&g);
        }
        out.gammas[k as usize] = g;
    }
    if !residual.is_zero() {
        return Err(Error::NotSymmetric { n, residual });
    }
    Ok(out)
}

/// Gamma vector of a homogeneous `x <-> y` symmetric polynomial in the basis
/// `(xy)^k (x+y)^(n-2k)`.
pub fn bivariate_gamma_expansion(p: &BiPoly) -> Result<GammaVector> {
    let n = p.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    if !p.is_xy_symmetric() {
        return Err(Error::NotXYSymmetric);
    }
    let g = gamma_expansion(&p.set_y_to_one(), n)?;
    debug_assert_eq!(&g.reconstruct_bivariate(), p);
    Ok(g)
}

/// `f = a + x b` with `a` symmetric about `n/2` and `b` about `(n-1)/2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymmetricDecomposition {
    pub n: u32,
    pub a: UniPoly,
    pub b: UniPoly,
}

pub fn symmetric_decomposition(f: &UniPoly, n: u32) -> Result<SymmetricDecomposition> {
    check_degree(f, n)?;
    // x^(n+1) f(1/x) is the reciprocal with respect to n + 1.
    let refl_up = f.reciprocal(n + 1)?;
    let refl = f.reciprocal(n)?;
    let a = (f - &refl_up)
        .div_one_minus_x()
        .ok_or(Error::InternalDivisionFailure)?;
    let b = (&refl - f)
        .div_one_minus_x()
        .ok_or(Error::InternalDivisionFailure)?;

    let ok = &a + &b.shift(1) == *f
        && a.is_symmetric(n)
        && (b.is_zero() || (n >= 1 && b.is_symmetric(n - 1)));
    if !ok {
        return Err(Error::InternalDivisionFailure);
    }
    Ok(SymmetricDecomposition { n, a, b })
}

/// Bivariate analogue for a homogeneous `P` of degree `N`:
/// `P = S1 + y S2`, `S1` symmetric of degree `N` and `S2` of degree `N-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeSplit {
    /// Gamma vector of `S1`, center `N`.
    pub plain: GammaVector,
    /// Gamma vector of `S2`, center `N - 1`.
    pub y_prefixed: GammaVector,
}

pub fn bivariate_type_split(p: &BiPoly) -> Result<TypeSplit> {
    let big_n = p.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    // In the variable y with x = 1 this is the ordinary decomposition.
    let h = p.swap_xy().set_y_to_one();
    let d = symmetric_decomposition(&h, big_n)?;
    let plain = gamma_expansion(&d.a, big_n)?;
    let y_prefixed = if d.b.is_zero() {
        GammaVector::zero(big_n.saturating_sub(1))
    } else {
        gamma_expansion(&d.b, big_n - 1)?
    };
    Ok(TypeSplit { plain, y_prefixed })
}

/// Coefficients of `f` read at `0..=n` in the order
/// `f_0, f_n, f_1, f_(n-1), ...`, ending at `f_((n+1)/2)`.
fn alternating_chain(f: &UniPoly, n: u32) -> Vec<Rational> {
    let (mut lo, mut hi) = (0i64, n as i64);
    let mut out = Vec::with_capacity(n as usize + 1);
    while lo <= hi {
        out.push(f.coeff(lo as u32));
        if hi != lo {
            out.push(f.coeff(hi as u32));
        }
        lo += 1;
        hi -= 1;
    }
    out
}

pub fn is_alternatingly_increasing(f: &UniPoly, n: u32) -> Result<bool> {
    check_degree(f, n)?;
    let chain = alternating_chain(f, n);
    Ok(chain.windows(2).all(|w| w[0] <= w[1]))
}

/// Unimodality of `f_0, ..., f_deg` and, when unimodal, the argmax indices.
/// A non-unimodal polynomial reports an empty mode set.
pub fn unimodality(f: &UniPoly) -> Result<(bool, BTreeSet<u32>)> {
    if let Some(index) = f.first_negative() {
        return Err(Error::NegativeCoefficient { index });
    }
    let Some(deg) = f.degree() else {
        return Ok((true, BTreeSet::new()));
    };
    let c = f.dense(deg as usize + 1);
    let mut i = 0;
    while i + 1 < c.len() && c[i] <= c[i + 1] {
        i += 1;
    }
    while i + 1 < c.len() && c[i] >= c[i + 1] {
        i += 1;
    }
    if i + 1 != c.len() {
        return Ok((false, BTreeSet::new()));
    }
    let max = c.iter().max().expect("nonempty");
    let modes = (0..c.len() as u32)
        .filter(|&j| &c[j as usize] == max)
        .collect();
    Ok((true, modes))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    pub decomposition: SymmetricDecomposition,
    pub gamma_a: Option<GammaVector>,
    pub gamma_b: Option<GammaVector>,
    /// Gamma vector of `f` itself when `f` is symmetric about `n/2`.
    pub gamma_f: Option<GammaVector>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PositivityReport {
    pub n: u32,
    pub polynomial: UniPoly,
    pub symmetric: bool,
    pub gamma_positive: Option<bool>,
    pub bi_gamma_positive: bool,
    pub alternatingly_increasing: bool,
    pub unimodal: bool,
    pub modes: BTreeSet<u32>,
    pub witnesses: Witnesses,
}

impl PositivityReport {
    pub fn build(f: &UniPoly, n: u32) -> Result<PositivityReport> {
        let decomposition = symmetric_decomposition(f, n)?;
        let gamma_a = gamma_expansion(&decomposition.a, n).ok();
        let gamma_b = if decomposition.b.is_zero() {
            Some(GammaVector::zero(n.saturating_sub(1)))
        } else {
            n.checked_sub(1)
                .and_then(|nb| gamma_expansion(&decomposition.b, nb).ok())
        };
        let gamma_f = gamma_expansion(f, n).ok();
        let symmetric = gamma_f.is_some();
        let bi_gamma_positive = matches!((&gamma_a, &gamma_b), (Some(ga), Some(gb))
            if ga.is_nonnegative() && gb.is_nonnegative());
        let alternatingly_increasing = is_alternatingly_increasing(f, n)?;
        let (unimodal, modes) = unimodality(f).unwrap_or((false, BTreeSet::new()));

        let report = PositivityReport {
            n,
            polynomial: f.clone(),
            symmetric,
            gamma_positive: gamma_f.as_ref().map(GammaVector::is_nonnegative),
            bi_gamma_positive,
            alternatingly_increasing,
            unimodal,
            modes,
            witnesses: Witnesses {
                decomposition,
                gamma_a,
                gamma_b,
                gamma_f,
            },
        };
        report.check_implications()?;
        Ok(report)
    }

    /// bi-gamma-positive => alternatingly increasing => unimodal. The second
    /// step is only meaningful for nonnegative coefficients.
    fn check_implications(&self) -> Result<()> {
        let nonneg = self.polynomial.first_negative().is_none();
        let violated = (self.bi_gamma_positive && !self.alternatingly_increasing)
            || (self.alternatingly_increasing && nonneg && !self.unimodal);
        if violated {
            return Err(Error::Mismatch {
                expected: "bi-gamma => alternatingly increasing => unimodal".into(),
                found: format!(
                    "bi-gamma {}, alternatingly increasing {}, unimodal {}",
                    self.bi_gamma_positive, self.alternatingly_increasing, self.unimodal
                ),
            });
        }
        Ok(())
    }
}

/// Bi-gamma-positivity of `f` about `n`, with the full report as witness.
pub fn is_bi_gamma_positive(f: &UniPoly, n: u32) -> Result<PositivityReport> {
    PositivityReport::build(f, n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ExpansionType {
    /// `A` itself is x/y symmetric (all multiplicities 1).
    TypeI,
    /// `A / y` is x/y symmetric (all multiplicities 2).
    TypeII,
    /// Neither (mixed multiplicities).
    TypeIII,
}

impl std::fmt::Display for ExpansionType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ExpansionType::TypeI => "TypeI",
            ExpansionType::TypeII => "TypeII",
            ExpansionType::TypeIII => "TypeIII",
        };
        f.write_str(s)
    }
}

pub fn classify_expansion_type(spec: &MultisetSpec, p: &BiPoly) -> Result<ExpansionType> {
    if spec.is_empty() {
        return Err(Error::EmptySpec);
    }
    if let Some(&bad) = spec.multiplicities().iter().find(|&&m| m > 2) {
        return Err(Error::UnsupportedMultiplicity { multiplicity: bad });
    }
    let found = if p.is_xy_symmetric() {
        ExpansionType::TypeI
    } else if p.div_y().is_some_and(|q| q.is_xy_symmetric()) {
        ExpansionType::TypeII
    } else {
        ExpansionType::TypeIII
    };
    let expected = if spec.count_of(2) == 0 {
        ExpansionType::TypeI
    } else if spec.count_of(1) == 0 {
        ExpansionType::TypeII
    } else {
        ExpansionType::TypeIII
    };
    if found != expected {
        return Err(Error::Mismatch {
            expected: expected.to_string(),
            found: found.to_string(),
        });
    }
    Ok(found)
}

/// `a~(m,k) = k a(m,k) + 2(m+3-2k) a(m,k-1)`: one `T` step on a plain
/// expansion of center `m+1`, giving center `m+2`.
pub fn recurrence_tilde_a(g: &GammaVector) -> GammaVector {
    let m = g.n as i64 - 1;
    let mut out = GammaVector::zero(g.n + 1);
    for (k, slot) in out.gammas.iter_mut().enumerate() {
        let ki = k as i64;
        let mut v = g.get(k) * rat(ki);
        if k >= 1 {
            v += g.get(k - 1) * rat(2 * (m + 3 - 2 * ki));
        }
        *slot = v;
    }
    out
}

/// `b~(m,k) = k b(m,k) + 2(m-2k+2) b(m,k-1)`: the `y`-prefixed part of one
/// `T` step on `y sum_k b(m,k) (xy)^k (x+y)^(m-2k)`, center `m` to `m+1`.
pub fn recurrence_tilde_b(g: &GammaVector) -> GammaVector {
    let m = g.n as i64;
    let mut out = GammaVector::zero(g.n + 1);
    for (k, slot) in out.gammas.iter_mut().enumerate() {
        let ki = k as i64;
        let mut v = g.get(k) * rat(ki);
        if k >= 1 {
            v += g.get(k - 1) * rat(2 * (m - 2 * ki + 2));
        }
        *slot = v;
    }
    out
}
