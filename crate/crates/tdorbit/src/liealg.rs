//! The adjoint and coadjoint spaces of `G_n` and the `G_n`-actions on them,
//! together with the per-segment orbit invariants.
//!
//! Only the two relevant matrix diagonals are stored. Boundary convention:
//! `alpha_0 = alpha_(n+1) = 0` and `y_0 = y_n = 0`, which makes the first and
//! last rows of the action formulas uniform.
//!
//! Both actions depend only on the alpha coordinates of the acting element, so
//! they factor through the abelianization of `G_n`; consequently the left and
//! right composition conventions coincide. We state the axiom as a left action:
//! `act(g * h, F) = act(g, act(h, F))`.

use crate::fq::FieldElement;
use crate::group::GroupElement;
use crate::{Error, Result};

/// A point of the Lie algebra `g_n`, coordinates `(a_1..a_n, b_1..b_(n-1))`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AdjointPoint {
    pub a: Vec<FieldElement>,
    pub b: Vec<FieldElement>,
}

/// A point of the dual space `g_n*`, coordinates `(x_1..x_n, y_1..y_(n-1))`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CoadjointPoint {
    pub x: Vec<FieldElement>,
    pub y: Vec<FieldElement>,
}

impl AdjointPoint {
    pub fn new(a: Vec<FieldElement>, b: Vec<FieldElement>) -> Self {
        assert!(!a.is_empty());
        assert_eq!(a.len(), b.len() + 1);
        AdjointPoint { a, b }
    }

    pub fn zero(n: usize, q: u32) -> Self {
        AdjointPoint::new(
            vec![FieldElement::zero(q); n],
            vec![FieldElement::zero(q); n - 1],
        )
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn q(&self) -> u32 {
        self.a[0].modulus()
    }
}

impl CoadjointPoint {
    pub fn new(x: Vec<FieldElement>, y: Vec<FieldElement>) -> Self {
        assert!(!x.is_empty());
        assert_eq!(x.len(), y.len() + 1);
        CoadjointPoint { x, y }
    }

    pub fn zero(n: usize, q: u32) -> Self {
        CoadjointPoint::new(
            vec![FieldElement::zero(q); n],
            vec![FieldElement::zero(q); n - 1],
        )
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn q(&self) -> u32 {
        self.x[0].modulus()
    }

    /// Index in the lexicographic enumeration of all points (x before y).
    pub fn index(&self) -> usize {
        let q = self.q() as usize;
        let mut idx = 0;
        for e in self.x.iter().chain(&self.y) {
            idx = idx * q + e.value() as usize;
        }
        idx
    }

    pub fn from_index(mut idx: usize, n: usize, q: u32) -> Self {
        let qu = q as usize;
        let mut digits = vec![0u32; 2 * n - 1];
        for d in digits.iter_mut().rev() {
            *d = (idx % qu) as u32;
            idx /= qu;
        }
        let x = digits[..n]
            .iter()
            .map(|&v| FieldElement::new(v, q))
            .collect();
        let y = digits[n..]
            .iter()
            .map(|&v| FieldElement::new(v, q))
            .collect();
        CoadjointPoint::new(x, y)
    }
}

fn check_shapes(n: usize, q: u32, g: &GroupElement) -> Result<()> {
    if g.n() != n || g.q() != q {
        return Err(Error::ShapeMismatch(format!(
            "element is (n, q) = ({}, {}), point is ({}, {})",
            g.n(),
            g.q(),
            n,
            q
        )));
    }
    Ok(())
}

/// Coadjoint action: `x'_i = x_i + alpha_(i-1) y_(i-1) - alpha_(i+1) y_i`,
/// with `y` unchanged. Does not depend on the beta coordinates of `g`.
pub fn coadjoint_act(g: &GroupElement, f: &CoadjointPoint) -> Result<CoadjointPoint> {
    check_shapes(f.n(), f.q(), g)?;
    let n = f.n();
    let x = (0..n)
        .map(|i| {
            let mut v = f.x[i];
            if i > 0 {
                v = v + g.alpha[i - 1] * f.y[i - 1];
            }
            if i + 1 < n {
                v = v - g.alpha[i + 1] * f.y[i];
            }
            v
        })
        .collect();
    Ok(CoadjointPoint::new(x, f.y.clone()))
}

/// Adjoint action: `b'_i = b_i + alpha_i a_(i+1) - alpha_(i+1) a_i`, `a` unchanged.
pub fn adjoint_act(g: &GroupElement, pt: &AdjointPoint) -> Result<AdjointPoint> {
    check_shapes(pt.n(), pt.q(), g)?;
    let b = (0..pt.b.len())
        .map(|i| pt.b[i] + g.alpha[i] * pt.a[i + 1] - g.alpha[i + 1] * pt.a[i])
        .collect();
    Ok(AdjointPoint::new(pt.a.clone(), b))
}

/// The alternating sum `I_r` over the segment `(lo, hi]` of a coadjoint point:
/// for each odd offset `s` the term is
/// `y_(lo+1) y_(lo+3) ... y_(lo+s-2) * x_(lo+s) * y_(lo+s+1) y_(lo+s+3) ... y_(hi-1)`.
///
/// Defined when the segment length `hi - lo` is odd and the interior `y`'s are
/// all nonzero (the segment is a maximal nonzero-y run); constant along the
/// coadjoint orbit.
pub fn segment_invariant(f: &CoadjointPoint, lo: usize, hi: usize) -> Result<FieldElement> {
    let n = f.n();
    let q = f.q();
    assert!(
        lo < hi && hi <= n,
        "segment ({lo}, {hi}] out of range for n = {n}"
    );
    let len = hi - lo;
    if len % 2 == 0 {
        return Err(Error::EvenSegment { lo, hi });
    }
    for j in lo + 1..hi {
        if f.y[j - 1].is_zero() {
            return Err(Error::ZeroInteriorY { lo, hi, at: j });
        }
    }
    let mut total = FieldElement::zero(q);
    for s in (1..=len).step_by(2) {
        let mut term = f.x[lo + s - 1];
        // y's at odd offsets before s
        let mut u = 1;
        while u < s {
            term = term * f.y[lo + u - 1];
            u += 2;
        }
        // y's at even offsets after s
        let mut u = s + 1;
        while u < len {
            term = term * f.y[lo + u - 1];
            u += 2;
        }
        total = total + term;
    }
    Ok(total)
}

/// Products `c_s = prod(y at odd offsets < s) * prod(y at even offsets > s)`
/// for odd offsets `s` of the segment `(lo, hi]`; these are the coefficients
/// of the `x`'s in the segment invariant and also the direction of the
/// stabilizer line used by the basic representations.
pub(crate) fn segment_coefficients(
    y: &[FieldElement],
    lo: usize,
    hi: usize,
    q: u32,
) -> Vec<FieldElement> {
    let len = hi - lo;
    let mut out = Vec::with_capacity(len / 2 + 1);
    for s in (1..=len).step_by(2) {
        let mut c = FieldElement::one(q);
        let mut u = 1;
        while u < s {
            c = c * y[lo + u - 1];
            u += 2;
        }
        let mut u = s + 1;
        while u <= len.saturating_sub(1) {
            c = c * y[lo + u - 1];
            u += 2;
        }
        out.push(c);
    }
    out
}
