//! The bound functions: `g(t) = t^(1 + log2 t)`, the square-root variant
//! `t^((1 + log2 t)/2)`, and the recursive `f` with `f(1) = 1` and
//! `f(t+1) = (t+1) g(g(f(t)))`.
//!
//! Bounded quantities are cardinalities, so every comparison uses the
//! integer ceiling; `f`'s recursion applies the ceiling after each `g`
//! evaluation to stay integral. `f` explodes fast and overflows the
//! representable range at t = 4 already; that is reported, never wrapped.

use crate::error::{Error, Result};

/// A bound evaluated at an integer input.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundValue {
    pub input: u64,
    pub raw: f64,
    pub ceil: u128,
}

fn g_raw(x: f64) -> f64 {
    let l = x.log2();
    (l * (1.0 + l)).exp2()
}

fn kos_raw(x: f64) -> f64 {
    let l = x.log2();
    (l * (1.0 + l) / 2.0).exp2()
}

/// Ceiling with a relative-epsilon snap: power evaluations that are
/// integers mathematically can land a few ulps above, and a plain ceiling
/// would overshoot by one.
fn int_ceil(raw: f64) -> Option<u128> {
    if !raw.is_finite() || raw >= 2f64.powi(127) || raw < 0.0 {
        return None;
    }
    let nearest = raw.round();
    let snapped = if (raw - nearest).abs() <= 1e-9 * nearest.abs().max(1.0) {
        nearest
    } else {
        raw.ceil()
    };
    Some(snapped as u128)
}

fn eval(t: u64, f: impl Fn(f64) -> f64) -> Result<BoundValue> {
    assert!(t >= 1, "bounds are defined for t >= 1");
    let raw = f(t as f64);
    let ceil = int_ceil(raw).ok_or(Error::Overflow { t })?;
    Ok(BoundValue { input: t, raw, ceil })
}

/// `g(t) = t^(1 + log2 t)`.
pub fn bound_g(t: u64) -> Result<BoundValue> {
    eval(t, g_raw)
}

/// `t^((1 + log2 t)/2)`, the explicit finite-over-hypercentral witness
/// bound; the square root of `g`.
pub fn bound_kos(t: u64) -> Result<BoundValue> {
    eval(t, kos_raw)
}

/// The recursion `f(1) = 1`, `f(t+1) = (t+1) g(g(f(t)))`, with the
/// ceiling applied after each `g`. Overflows above t = 3.
pub fn bound_f(t: u64) -> Result<BoundValue> {
    assert!(t >= 1, "bounds are defined for t >= 1");
    let mut acc: u128 = 1;
    for k in 2..=t {
        let inner = int_ceil(g_raw(acc as f64)).ok_or(Error::Overflow { t: k })?;
        let outer = int_ceil(g_raw(inner as f64)).ok_or(Error::Overflow { t: k })?;
        acc = u128::from(k)
            .checked_mul(outer)
            .ok_or(Error::Overflow { t: k })?;
    }
    Ok(BoundValue {
        input: t,
        raw: acc as f64,
        ceil: acc,
    })
}
