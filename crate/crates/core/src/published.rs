//! Published claims that the analysis compares its own results against.
//!
//! Nothing here is used to compute a verdict. The claims are kept verbatim so
//! that disagreements can be reported instead of silently reconciled.

use crate::curve::{Assertions, Curve};
use crate::fields::FqContext;

/// A worked example curve together with what was claimed about it.
#[derive(Debug, Clone, Copy)]
pub struct ClaimedCurve {
    pub label: &'static str,
    pub p: u64,
    pub expression: &'static str,
    /// The claimed complete list of affine points.
    pub claimed_points: &'static [(u64, u64)],
    /// The claim that `f(x) = x` satisfies the vanishing condition.
    pub claimed_identity_witness: bool,
    /// Whether the curve was presented as smooth.
    pub claimed_smooth: bool,
}

pub const EXAMPLE_CURVES: [ClaimedCurve; 2] = [
    ClaimedCurve {
        label: "conic over F_3",
        p: 3,
        expression: "y^2 + 2*x*y + 2*y + x",
        claimed_points: &[(0, 0), (0, 1)],
        claimed_identity_witness: true,
        claimed_smooth: true,
    },
    ClaimedCurve {
        label: "elliptic curve over F_5",
        p: 5,
        expression: "y^2 - x^3 - 3*x - 1",
        claimed_points: &[(0, 1), (0, 4), (1, 0)],
        claimed_identity_witness: true,
        claimed_smooth: true,
    },
];

impl ClaimedCurve {
    pub fn context(&self) -> FqContext {
        FqContext::prime(self.p).expect("example primes are valid")
    }

    pub fn curve(&self) -> Curve {
        Curve::parse(self.expression, &self.context(), Assertions::default())
            .expect("example expressions parse")
    }

    /// Whether `c` is this example up to a nonzero scalar.
    pub fn matches(&self, c: &Curve) -> bool {
        let ctx = c.context();
        if ctx.p() != self.p || ctx.k() != 1 {
            return false;
        }
        let own = self.curve();
        let own = own.defining();
        (1..self.p).any(|s| own.scale(&ctx.element_at(s)) == *c.defining())
    }
}

/// Claimed conic threshold: forced to zero for p >= 5, any k.
pub fn conic_claim(p: u64, _k: u32) -> Option<bool> {
    (p >= 5).then_some(true)
}

/// Claimed elliptic thresholds: p > 13; p = 7 with k > 2; p in {11, 13}
/// with k > 1. `None` where nothing is claimed.
pub fn elliptic_claim(p: u64, k: u32) -> Option<bool> {
    let forced = p > 13 || (p == 7 && k > 2) || ((p == 11 || p == 13) && k > 1);
    forced.then_some(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples_match_themselves_and_scalings() {
        for ex in EXAMPLE_CURVES {
            let c = ex.curve();
            assert!(ex.matches(&c));
            let ctx = ex.context();
            let scaled =
                Curve::new(c.defining().scale(&ctx.from_int(2)), Assertions::default()).unwrap();
            assert!(ex.matches(&scaled));
        }
        let other = Curve::parse(
            "x*y - 1",
            &FqContext::prime(3).unwrap(),
            Assertions::default(),
        )
        .unwrap();
        assert!(!EXAMPLE_CURVES[0].matches(&other));
    }
}
