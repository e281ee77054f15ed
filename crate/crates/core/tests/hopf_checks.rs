//! Axiom and grading reports on valid and corrupted presentations.

mod common;

use common::*;
use hopfforge::cli::PresentationFile;
use hopfforge::hopfstruct::{grading_check, hopf_axiom_report, AxiomCheck, AxisKind, Grading};
use hopfforge::presets::{build, PresetId};
use hopfforge::{Error, Scalar};

const C2_WRONG_PAIR: &str = r#"{"field": "Q",
    "generators": [{"name": "y", "kind": "skewprimitive", "pair": "g^2"},
                   {"name": "g", "kind": "grouplike", "weight": 0}],
    "order": ["y", "g^-1", "g"],
    "rules": [{"lhs": "g*y", "rhs": "y*g + g^2 - g"},
              {"lhs": "g^-1*y", "rhs": "y*g^-1 - 1 + g^-1"}]}"#;

#[test]
fn corrupted_c2_fails_well_definedness() {
    let h = PresentationFile::from_json(C2_WRONG_PAIR)
        .unwrap()
        .construct("bad")
        .unwrap();
    let report = hopf_axiom_report(&h, 3, 10, 0);
    assert!(report.iter().any(|v| v.check == AxiomCheck::WellDefined));
}

#[test]
fn skew_commutation_is_valid_for_every_pair_exponent() {
    for b in -3..=3 {
        for xi in [2, -1, 3] {
            let h = build(&PresetId::A {
                b,
                xi: Scalar::from_int(xi),
            })
            .unwrap();
            assert!(hopf_axiom_report(&h, 3, 10, 1).is_empty(), "A({b}, {xi})");
        }
    }
}

#[test]
fn bad_parameters_are_rejected() {
    assert!(matches!(
        PresetId::parse("A:b=1,xi=0").and_then(|id| build(&id)),
        Err(Error::InvalidParameter(_))
    ));
    assert!(PresetId::parse("F:t=x").is_err());
    assert!(PresetId::parse("F:s=1").is_err());
}

#[test]
fn quadratic_field_presets() {
    let h = build(&PresetId::parse("A:b=1,xi=sqrt(2)").unwrap()).unwrap();
    assert_eq!(h.field(), Some(2));
    assert!(hopf_axiom_report(&h, 3, 10, 0).is_empty());
}

#[test]
fn gradings() {
    for sel in ["F:t=0", "F:t=1", "F:t=2"] {
        let h = preset(sel);
        assert!(grading_check(&h, &Grading::y_grading(&h).unwrap(), 30, 0)
            .unwrap()
            .is_empty());
        assert!(
            grading_check(&h, &Grading::xy_bigrading(&h).unwrap(), 30, 0)
                .unwrap()
                .is_empty()
        );
    }
    let h = preset("F:t=1");
    let x_as_coalgebra = Grading::by_names(&h, &[("x", AxisKind::Coalgebra, &[("x", 1)])]).unwrap();
    assert!(!grading_check(&h, &x_as_coalgebra, 30, 0)
        .unwrap()
        .is_empty());
    let c2 = preset("C:m=2");
    let v = grading_check(
        &c2,
        &Grading::by_names(&c2, &[("g", AxisKind::Comodule, &[("g", 1)])]).unwrap(),
        5,
        0,
    )
    .unwrap();
    assert!(!v.is_empty() && v.iter().all(|v| v.check == "precondition"));
}

#[test]
fn every_preset_passes_with_seeded_trials() {
    for sel in ALL_PRESETS {
        let h = preset(sel);
        assert!(hopf_axiom_report(&h, 3, 5, 11).is_empty(), "{sel}");
    }
}
