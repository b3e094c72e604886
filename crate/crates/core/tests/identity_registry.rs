use num_rational::BigRational;
use proptest::prelude::*;

use trigsum_core::identity_registry::*;
use trigsum_core::odd_zeta::PrecisionContext;

const POLY_IDS: [&str; 8] = ["thm11-cos", "thm11-sin", "thm18-cos", "thm18-sin", "cor5-beta", "cor6-lambda", "cor7", "cor8"];

fn interior(rec: &IdentityRecord, t: f64) -> f64 {
    let (lo, hi) = (rec.interval.lo_f64(), rec.interval.hi_f64());
    lo + (hi - lo) * (0.02 + 0.96 * t)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn closed_form_matches_series(i in 0usize..8, r in 2u32..5, t in 0.0f64..1.0, c in 0.5f64..3.0) {
        let rec = get_identity(POLY_IDS[i], r, None).unwrap();
        let x = interior(&rec, t) * c;
        let ctx = PrecisionContext::for_target(1e-16);
        let closed = rec.closed_form_eval(c, x, &ctx).unwrap().to_f64();
        let partial = rec.partial_sum_eval(c, x, 10_000);
        prop_assert!((closed - partial).abs() < 1e-10, "{} r={r} x/c={}: {closed} vs {partial}", rec.id, x / c);
    }

    #[test]
    fn shifted_family_matches_series(r in 2u32..4, p in 0i64..12, t in 0.0f64..1.0) {
        let x0 = BigRational::new(p.into(), 24.into());
        let base = get_identity("cor6-lambda", r, None).unwrap();
        let rec = theorem23_shift(&base, &x0).unwrap();
        let y = interior(&rec, t);
        let ctx = PrecisionContext::for_target(1e-16);
        let closed = rec.closed_form_eval(1.0, y, &ctx).unwrap().to_f64();
        let partial = rec.partial_sum_eval(1.0, y, 10_000);
        prop_assert!((closed - partial).abs() < 1e-9, "x0={x0} y={y}: {closed} vs {partial}");
    }

    #[test]
    fn integration_inverts_differentiation(k in 0usize..2, r in 1u32..6) {
        let rec = get_identity(["thm11-cos", "thm18-cos"][k], r, None).unwrap();
        let up = corollary2_integrate(&rec).unwrap();
        prop_assert_eq!(up.closed.poly.derivative(), rec.closed.poly.clone());
        prop_assert!(up.interval.lo_closed && up.interval.hi_closed);
    }
}

#[test]
fn every_catalog_entry_builds_across_its_range() {
    for e in CATALOG.iter() {
        let top = e.r_max.unwrap_or(u32::MAX).min(e.r_min + 4);
        for r in e.r_min..=top {
            let rec = e.build(r, None).unwrap();
            assert_eq!(rec.r, r);
            assert!(rec.interval.lo_f64() < rec.interval.hi_f64());
        }
        if let Some(m) = e.r_max {
            assert!(e.build(m + 1, None).is_err(), "{}", e.id);
        }
        if e.r_min > 0 {
            assert!(e.build(e.r_min - 1, None).is_err(), "{}", e.id);
        }
    }
}

#[test]
fn parameter_errors() {
    assert!(matches!(get_identity("nope", 1, None), Err(RegistryError::UnknownId(_))));
    let half = BigRational::new(1.into(), 2.into());
    assert!(get_identity("eq59", 1, Some(&half)).is_err());
    let ctx = PrecisionContext::for_target(1e-16);
    assert!(matches!(
        closed_form_eval("example2", 0, None, 1.0, 3.5, &ctx),
        Err(RegistryError::OutsideInterval { .. }) | Err(RegistryError::SingularPoint(_))
    ));
}

#[test]
fn reports_serialise_to_documented_schema() {
    let r = get_identity("thm16", 2, None).unwrap().verify_documented();
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(|s| s.as_str()).collect();
    for k in ["id", "r", "c", "N", "tol", "max_error", "pass"] {
        assert!(keys.contains(&k), "{k}");
    }
    assert_eq!(keys.len(), 7);
    assert_eq!(r.to_csv().split(',').count(), VerificationReport::CSV_HEADER.split(',').count());
}
