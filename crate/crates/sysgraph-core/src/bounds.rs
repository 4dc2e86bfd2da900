//! The bounding-function calculus behind the profile lower bounds.
//!
//! A bounding function g maps set sizes to profile deficits: a d-regular
//! graph satisfies P(s) ≥ d − g(s). The bootstrap functional
//! 𝓕_ε(g)(s) = g(2^(4/ε)) + ε·log₂ s turns one such bound into another;
//! optimizing ε and iterating from g₀(s) = log₂ s produces the family
//! g_ℓ(s) = c_ℓ·(log₂ s)^(1/ℓ) with c_ℓ ≤ 4ℓ, whose lower envelope is
//! within 8(1 + log₂ log₂ s).
//!
//! Sizes can exceed anything represent­able in `f64` (the interesting regime
//! is s ≈ 2^1024 and beyond), so every evaluation has a log-domain twin
//! taking L = log₂ s directly.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundsError {
    #[error("{quantity} = {value} is outside the domain ({requirement})")]
    Domain {
        quantity: &'static str,
        value: f64,
        requirement: &'static str,
    },
}

fn require(ok: bool, quantity: &'static str, value: f64, requirement: &'static str) -> Result<(), BoundsError> {
    if ok {
        Ok(())
    } else {
        Err(BoundsError::Domain {
            quantity,
            value,
            requirement,
        })
    }
}

/// Beyond this ℓ the envelope members 4ℓ·L^(1/ℓ) only grow at any
/// log-size L ≤ 2^64, so the minimization stops here.
pub const ELL_CAP: u32 = 64;

/// A monotone bound on the profile deficit, evaluated in logs base 2.
#[derive(Debug, Clone, PartialEq)]
pub enum BoundingFunction {
    /// g(s) = log₂ s, the pseudo-cube deficit.
    PseudoCubeLog,
    /// g(s) = c·(log₂ s)^(1/ℓ).
    PowerLog { c: f64, ell: u32 },
    /// 𝓕_ε(inner): s ↦ inner(2^(4/ε)) + ε·log₂ s.
    Bootstrap {
        inner: Box<BoundingFunction>,
        epsilon: f64,
    },
}

impl BoundingFunction {
    /// Evaluate at a size s > 1.
    pub fn eval(&self, s: f64) -> Result<f64, BoundsError> {
        require(s > 1.0, "s", s, "must be greater than 1")?;
        self.eval_log2(s.log2())
    }

    /// Evaluate at L = log₂ s > 0; use this form for sizes beyond `f64`.
    pub fn eval_log2(&self, log2_s: f64) -> Result<f64, BoundsError> {
        require(
            log2_s > 0.0 && log2_s.is_finite(),
            "log2 s",
            log2_s,
            "must be positive and finite",
        )?;
        match self {
            BoundingFunction::PseudoCubeLog => Ok(log2_s),
            BoundingFunction::PowerLog { c, ell } => {
                require(*c > 0.0, "c", *c, "must be positive")?;
                require(*ell >= 1, "ell", f64::from(*ell), "must be at least 1")?;
                Ok(c * log2_s.powf(1.0 / f64::from(*ell)))
            }
            BoundingFunction::Bootstrap { inner, epsilon } => {
                require(*epsilon > 0.0, "epsilon", *epsilon, "must be positive")?;
                Ok(inner.eval_log2(4.0 / epsilon)? + epsilon * log2_s)
            }
        }
    }
}

/// The coefficient recurrence: applying the bootstrap at the optimal ε to
/// c·log^(1/ℓ) yields c'·log^(1/(ℓ+1)) with
/// c' = (4c^ℓℓ)^(1/(ℓ+1)) + (4(c/ℓ)^ℓ)^(1/(ℓ+1)).
///
/// Always ≥ 1 for c ≥ 1; when c ≤ 4ℓ the result is ≤ 4(ℓ+1) (asserted),
/// which is the induction giving c_ℓ ≤ 4ℓ.
pub fn next_coefficient(c: f64, ell: u32) -> Result<f64, BoundsError> {
    require(c >= 1.0, "c", c, "must be at least 1")?;
    require(ell >= 1, "ell", f64::from(ell), "must be at least 1")?;
    let l = f64::from(ell);
    let root = 1.0 / (l + 1.0);
    let c_next = (4.0 * c.powf(l) * l).powf(root) + (4.0 * (c / l).powf(l)).powf(root);
    assert!(c_next >= 1.0, "the recurrence never drops below 1");
    if c <= 4.0 * l {
        assert!(
            c_next <= 4.0 * (l + 1.0) + 1e-9,
            "induction step violated: {c_next} > 4({l}+1)"
        );
    }
    Ok(c_next)
}

/// The ε minimizing ε ↦ c·(4/ε)^(1/ℓ) + ε·log₂ s, namely
/// (c·4^(1/ℓ)/(ℓ·log₂ s))^(ℓ/(ℓ+1)).
pub fn optimal_epsilon(c: f64, ell: u32, s: f64) -> Result<f64, BoundsError> {
    require(s > 1.0, "s", s, "must be greater than 1")?;
    optimal_epsilon_log2(c, ell, s.log2())
}

/// Log-domain twin of [`optimal_epsilon`].
pub fn optimal_epsilon_log2(c: f64, ell: u32, log2_s: f64) -> Result<f64, BoundsError> {
    require(c >= 1.0, "c", c, "must be at least 1")?;
    require(ell >= 1, "ell", f64::from(ell), "must be at least 1")?;
    require(
        log2_s > 0.0 && log2_s.is_finite(),
        "log2 s",
        log2_s,
        "must be positive and finite",
    )?;
    let l = f64::from(ell);
    Ok((c * 4.0f64.powf(1.0 / l) / (l * log2_s)).powf(l / (l + 1.0)))
}

/// The iterated-bootstrap family up to ℓ_max ≤ [`ELL_CAP`].
#[derive(Debug, Clone, PartialEq)]
pub struct GEllFamily {
    /// g_ℓ with the exact recurrence coefficient c_ℓ (from c₀ = 1);
    /// entry ℓ-1 has shape c_ℓ·log^(1/ℓ).
    pub exact: Vec<BoundingFunction>,
    /// g_ℓ with the simplified coefficient 4ℓ.
    pub simplified: Vec<BoundingFunction>,
}

/// Build both coefficient families, asserting c_ℓ ≤ 4ℓ at every index.
pub fn g_ell_family(ell_max: u32) -> Result<GEllFamily, BoundsError> {
    require(ell_max >= 1, "ell_max", f64::from(ell_max), "must be at least 1")?;
    require(
        ell_max <= ELL_CAP,
        "ell_max",
        f64::from(ell_max),
        "must not exceed 64",
    )?;
    let mut exact = Vec::with_capacity(ell_max as usize);
    let mut simplified = Vec::with_capacity(ell_max as usize);
    let mut c = 1.0; // c₀
    for ell in 1..=ell_max {
        c = next_coefficient(c, ell)?;
        assert!(c <= 4.0 * f64::from(ell) + 1e-9, "c_ℓ ≤ 4ℓ must hold");
        exact.push(BoundingFunction::PowerLog { c, ell });
        simplified.push(BoundingFunction::PowerLog {
            c: 4.0 * f64::from(ell),
            ell,
        });
    }
    Ok(GEllFamily { exact, simplified })
}

/// One member of the simplified envelope: 4ℓ·L^(1/ℓ).
pub fn envelope_member_log2(ell: u32, log2_s: f64) -> f64 {
    4.0 * f64::from(ell) * log2_s.powf(1.0 / f64::from(ell))
}

/// The lower envelope min over ℓ ≤ 64 of 4ℓ·(log₂ s)^(1/ℓ), with the
/// minimizing ℓ (smallest on ties).
pub fn envelope_log2(log2_s: f64) -> Result<(f64, u32), BoundsError> {
    require(
        log2_s > 0.0 && log2_s.is_finite(),
        "log2 s",
        log2_s,
        "must be positive and finite",
    )?;
    let mut best = (f64::INFINITY, 0);
    for ell in 1..=ELL_CAP {
        let value = envelope_member_log2(ell, log2_s);
        if value < best.0 {
            best = (value, ell);
        }
    }
    Ok(best)
}

/// The closed-form deficit 8(1 + log₂ log₂ s), with log log clamped to 0
/// below s = 4 so the bound never over-claims.
pub fn closed_form_log2(log2_s: f64) -> f64 {
    let loglog = if log2_s <= 1.0 { 0.0 } else { log2_s.log2() };
    8.0 * (1.0 + loglog)
}

/// The basic profile bound d − log₂ s for pseudo-cubes.
pub fn pseudo_cube_bound(d: u32, s: f64) -> Result<f64, BoundsError> {
    require(s > 1.0, "s", s, "must be greater than 1")?;
    Ok(f64::from(d) - s.log2())
}

/// The dual systolic profile bound d − min(envelope, 8(1 + log log s)).
pub fn dual_systolic_bound(d: u32, s: f64) -> Result<f64, BoundsError> {
    require(s > 1.0, "s", s, "must be greater than 1")?;
    dual_systolic_bound_log2(d, s.log2())
}

/// Log-domain twin of [`dual_systolic_bound`].
pub fn dual_systolic_bound_log2(d: u32, log2_s: f64) -> Result<f64, BoundsError> {
    let (envelope, _) = envelope_log2(log2_s)?;
    let closed = closed_form_log2(log2_s);
    if (2.0..=1.8e19).contains(&log2_s) {
        // For 4 ≤ s ≤ 2^(2^64) the member at ℓ = ⌈log₂ L⌉ already beats
        // the closed form; past that the cap at ℓ = 64 lets the closed
        // form take over via the min below.
        assert!(
            envelope <= closed + 1e-9,
            "envelope {envelope} must not exceed the closed form {closed}"
        );
    }
    Ok(f64::from(d) - envelope.min(closed))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn power_log(c: f64, ell: u32) -> BoundingFunction {
        BoundingFunction::PowerLog { c, ell }
    }

    fn bootstrap(inner: BoundingFunction, epsilon: f64) -> BoundingFunction {
        BoundingFunction::Bootstrap {
            inner: Box::new(inner),
            epsilon,
        }
    }

    #[test]
    fn evaluation_of_each_form() {
        assert_eq!(BoundingFunction::PseudoCubeLog.eval(8.0).unwrap(), 3.0);
        // 𝓕_2(log)(4) = log₂(2^2) + 2·log₂ 4 = 6.
        let f = bootstrap(BoundingFunction::PseudoCubeLog, 2.0);
        assert_eq!(f.eval(4.0).unwrap(), 6.0);
        assert_eq!(power_log(4.0, 2).eval(65536.0).unwrap(), 16.0);
    }

    #[test]
    fn log_domain_twin_agrees_and_reaches_huge_sizes() {
        let g = power_log(4.0, 2);
        assert_eq!(g.eval(65536.0).unwrap(), g.eval_log2(16.0).unwrap());
        // s = 2^1024 overflows f64 but its log-size does not.
        assert_eq!(power_log(4.0, 2).eval_log2(1024.0).unwrap(), 128.0);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(
            BoundingFunction::PseudoCubeLog.eval(1.0),
            Err(BoundsError::Domain { quantity: "s", .. })
        ));
        assert!(BoundingFunction::PseudoCubeLog.eval_log2(0.0).is_err());
        assert!(power_log(4.0, 0).eval(4.0).is_err());
        assert!(bootstrap(BoundingFunction::PseudoCubeLog, 0.0).eval(4.0).is_err());
        assert!(next_coefficient(0.5, 1).is_err());
        assert!(optimal_epsilon(1.0, 1, 1.0).is_err());
        assert!(g_ell_family(65).is_err());
        assert!(dual_systolic_bound(5, 0.5).is_err());
    }

    #[test]
    fn coefficient_recurrence_values() {
        assert!((next_coefficient(1.0, 1).unwrap() - 4.0).abs() < 1e-12);
        // (4·4²·2)^(1/3) + (4·(4/2)²)^(1/3) = 128^(1/3) + 16^(1/3).
        let c = next_coefficient(4.0, 2).unwrap();
        assert!((c - (128f64.powf(1.0 / 3.0) + 16f64.powf(1.0 / 3.0))).abs() < 1e-12);
        assert!((c - 7.5595263).abs() < 1e-6);
        assert!(c <= 12.0);
        assert!(next_coefficient(1.0, 10).unwrap() >= 1.0);
    }

    #[test]
    fn optimal_epsilon_values_and_stationarity() {
        assert!((optimal_epsilon(1.0, 1, 16.0).unwrap() - 1.0).abs() < 1e-12);
        assert!((optimal_epsilon(1.0, 1, 65536.0).unwrap() - 0.5).abs() < 1e-12);
        // The returned ε is a stationary point of ε ↦ c(4/ε)^(1/ℓ) + εL.
        for &(c, ell, log2_s) in &[(1.0, 1, 4.0), (4.0, 2, 16.0), (7.5, 3, 300.0)] {
            let eps = optimal_epsilon_log2(c, ell, log2_s).unwrap();
            let f = |e: f64| c * (4.0 / e).powf(1.0 / f64::from(ell)) + e * log2_s;
            let h = eps * 1e-5;
            let derivative = (f(eps + h) - f(eps - h)) / (2.0 * h);
            assert!(
                derivative.abs() < 1e-6 * f(eps),
                "derivative {derivative} at ε = {eps}"
            );
        }
    }

    #[test]
    fn bootstrap_at_optimal_epsilon_matches_the_recurrence() {
        // 𝓕_ε*(c·log^(1/ℓ)) evaluated directly must equal
        // c'·log^(1/(ℓ+1)) with c' from the recurrence.
        for &c in &[1.0, 2.5, 4.0] {
            for ell in [1u32, 2, 3, 5] {
                for &log2_s in &[2.0, 16.0, 1024.0] {
                    let eps = optimal_epsilon_log2(c, ell, log2_s).unwrap();
                    let lifted = bootstrap(power_log(c, ell), eps)
                        .eval_log2(log2_s)
                        .unwrap();
                    let closed = power_log(next_coefficient(c, ell).unwrap(), ell + 1)
                        .eval_log2(log2_s)
                        .unwrap();
                    let rel = (lifted - closed).abs() / closed;
                    assert!(rel < 1e-9, "c={c} ℓ={ell} L={log2_s}: {lifted} vs {closed}");
                }
            }
        }
    }

    #[test]
    fn family_coefficients_stay_under_four_ell() {
        let family = g_ell_family(64).unwrap();
        assert_eq!(family.exact.len(), 64);
        for (i, g) in family.exact.iter().enumerate() {
            let ell = i as u32 + 1;
            let BoundingFunction::PowerLog { c, ell: e } = g else {
                panic!("family members are power-logs");
            };
            assert_eq!(*e, ell);
            assert!(*c >= 1.0 && *c <= 4.0 * f64::from(ell) + 1e-9);
            // g_ℓ(2) = c_ℓ ≥ 1.
            assert!((g.eval(2.0).unwrap() - c).abs() < 1e-12);
        }
        let BoundingFunction::PowerLog { c: c1, .. } = &family.exact[0] else {
            unreachable!()
        };
        assert!((c1 - 4.0).abs() < 1e-9);
    }

    #[test]
    fn exact_family_envelope_beats_simplified_beats_closed_form() {
        let family = g_ell_family(64).unwrap();
        for &log2_s in &[2.0, 5.0, 16.0, 100.0, 1024.0, 65536.0] {
            let exact = family
                .exact
                .iter()
                .map(|g| g.eval_log2(log2_s).unwrap())
                .fold(f64::INFINITY, f64::min);
            let simplified = family
                .simplified
                .iter()
                .map(|g| g.eval_log2(log2_s).unwrap())
                .fold(f64::INFINITY, f64::min);
            assert!(exact <= simplified + 1e-9);
            assert!(simplified <= closed_form_log2(log2_s) + 1e-9);
        }
    }

    #[test]
    fn every_form_is_monotone_in_s() {
        let family = g_ell_family(8).unwrap();
        let mut forms = vec![
            BoundingFunction::PseudoCubeLog,
            bootstrap(BoundingFunction::PseudoCubeLog, 0.5),
            bootstrap(power_log(4.0, 2), 0.25),
        ];
        forms.extend(family.exact);
        for form in &forms {
            let mut prev = f64::NEG_INFINITY;
            for i in 1..=60 {
                let value = form.eval_log2(f64::from(i) * 0.5).unwrap();
                assert!(value >= prev, "{form:?} decreased at step {i}");
                prev = value;
            }
            assert!(form.eval(2.0).unwrap() >= 1.0 - 1e-12);
        }
    }

    #[test]
    fn envelope_at_sixteen_picks_ell_three() {
        let (value, ell) = envelope_log2(16.0).unwrap();
        assert_eq!(ell, 3);
        // 12·16^(1/3).
        assert!((value - 30.2381052).abs() < 1e-6);
        // The next member up is exactly 16·16^(1/4) = 32.
        assert_eq!(envelope_member_log2(4, 16.0), 32.0);
    }

    #[test]
    fn dual_systolic_bound_values() {
        // s = 2: the ℓ = 1 member 4·log₂ 2 = 4 beats the closed form 8.
        assert_eq!(dual_systolic_bound(10, 2.0).unwrap(), 6.0);
        let b = dual_systolic_bound(20, 65536.0).unwrap();
        assert!((b - (20.0 - 30.2381052)).abs() < 1e-6);
        // At s = 2^(2^10) the ℓ = 10 member 40·2^(1024/1024 ... ) —
        // 4·10·1024^(1/10) = 80 stays under the closed form 8(1+10) = 88.
        assert_eq!(envelope_member_log2(10, 1024.0), 80.0);
        let huge = dual_systolic_bound_log2(20, 1024.0).unwrap();
        assert!(huge >= 20.0 - 88.0);
    }

    #[test]
    fn pseudo_cube_bound_is_d_minus_log() {
        assert_eq!(pseudo_cube_bound(4, 8.0).unwrap(), 1.0);
        assert_eq!(pseudo_cube_bound(4, 1.0).unwrap_err(), BoundsError::Domain {
            quantity: "s",
            value: 1.0,
            requirement: "must be greater than 1",
        });
    }
}
