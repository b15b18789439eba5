//! Hecke-side combinatorics: classical KL polynomials of `W(lambda)` and the
//! monodromic modules, plus the comparison between the two.
//!
//! Coefficients of the canonical basis are read with no sign: in A1 at an
//! integral class `C_s = A_s + A_e`. In the renormalised basis `(-1)^{l(w)} A_w`
//! each coefficient of `A_{w y}` in `C_{w x}` picks up `(-1)^{l(w x) - l(w y)}`,
//! which equals `(-1)^{l_lambda(x) - l_lambda(y)}` because the gap between the
//! two length differences is even.

pub mod kl;
pub mod monodromic;

pub use kl::KlTable;
pub use monodromic::{MElement, Monodromic, NElement, ResidueClass, ThetaKind};

use crate::error::{Error, Result};
use crate::integral::IntegralSystem;
use crate::laurent::LaurentPoly;
use crate::weyl::WeylElement;

/// One coefficient of `C_{w x}` read back as a KL polynomial of `W(lambda)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KlRecord {
    pub y: WeylElement,
    pub x: WeylElement,
    /// The raw coefficient of `A_{w y}` in `C_{w x}`.
    pub coefficient: LaurentPoly,
    /// Sign of the lowest term of `coefficient`.
    pub sign: i64,
    /// `c = ((l(w x) - l(w y)) - (l_lambda(x) - l_lambda(y))) / 2`.
    pub shift: i32,
    /// `P^lambda_{y,x}`.
    pub poly: LaurentPoly,
}

/// Half the gap between the length drop from `w x` to `w y` in `W` and the
/// drop from `x` to `y` in `W(lambda)`.
///
/// Measured on `w x` and `w y` rather than on `x` and `y`: the two differ once
/// `W(lambda)` is not a parabolic subgroup, and only this version respects the
/// degree bound of the canonical basis.
pub fn length_defect(
    sys: &IntegralSystem<'_>,
    w: &WeylElement,
    y: &WeylElement,
    x: &WeylElement,
) -> i32 {
    let weyl = sys.weyl();
    let full = weyl.multiply(w, x).length() as i32 - weyl.multiply(w, y).length() as i32;
    let integral = sys.lambda_length(x) as i32 - sys.lambda_length(y) as i32;
    (full - integral) / 2
}

/// Reads `P^lambda_{y,x}` off the canonical basis element `C_{w x}` of
/// `M^lambda`, with `w` minimal in `w W(lambda)`, and checks it against the
/// classical recursion in `W(lambda)`.
///
/// The coefficient of `A_{w y}` must equal `sign * q^c P^lambda_{y,x}` with `c`
/// from [`length_defect`]. The sign is read off, not assumed; with the theta
/// operators used here it always comes out `+1`, and the alternating sign
/// `(-1)^{l_lambda(x) - l_lambda(y)}` appears after renormalising the standard
/// basis to `(-1)^{l(w)} A_w`.
pub fn extract_kl(
    mono: &Monodromic<'_>,
    sys: &IntegralSystem<'_>,
    table: &KlTable<'_, IntegralSystem<'_>>,
    w: &WeylElement,
    y: &WeylElement,
    x: &WeylElement,
) -> Result<KlRecord> {
    let weyl = mono.weyl();
    let decomposition = sys.min_coset_decomposition(w)?;
    if decomposition.w_min != *w {
        return Err(Error::HypothesesNotVerified(format!(
            "[{}] is not minimal in its W(lambda) coset",
            w.word_string()
        )));
    }
    for z in [x, y] {
        if !sys.contains(z)? {
            return Err(Error::NotInIntegralWeylGroup {
                residue: z.word().to_vec(),
            });
        }
    }
    let class = ResidueClass::of(sys.lambda());
    let c = mono.canonical_c(&class, &weyl.multiply(w, x))?;
    let coefficient = c.coeff(&weyl.multiply(w, y));
    let shift = length_defect(sys, w, y, x);
    let poly = table.p(y, x)?;
    let sign = coefficient.terms().next().map_or(1, |(_, c)| c.signum());
    if coefficient.scale(sign) != poly.shift(2 * shift) {
        return Err(Error::CoefficientMismatch(format!(
            "coefficient of A_[{}] in C_[{}] is {coefficient}, expected +-q^{shift} * ({poly})",
            weyl.multiply(w, y).word_string(),
            weyl.multiply(w, x).word_string()
        )));
    }
    Ok(KlRecord {
        y: y.clone(),
        x: x.clone(),
        coefficient,
        sign,
        shift,
        poly,
    })
}
