use codlab_core::catalog::{Catalog, Family, GroupId};
use codlab_core::exactnum::{factorial, Natural};
use codlab_core::search::{
    check_subset, derive_family_bounds, golden_csv, run_full_verification, sweep_family,
    sweep_sporadic, sweep_target, ExceptionRow, FamilyBounds, Verdict, VerifyConfig, DEFAULT_N_CAP,
    GOLDEN_TARGETS,
};
use codlab_core::{enumerate_partitions, sym_degree, Error};
use rayon::ThreadPoolBuilder;

/// `w ∈ cod(h)` read off the raw degree list, and `w ∉ cod(A_n)` by
/// checking every partition's constituent dimension.
fn witness_is_valid(catalog: &Catalog, h: &GroupId, n: u64, w: &Natural) -> bool {
    let rec = catalog.record(&h.label()).expect("degree data");
    let in_h = rec.degrees.iter().any(|d| {
        *d > Natural::from(1u32)
            && &(&rec.order / d) == w
            && (&rec.order % d) == Natural::from(0u32)
    });
    let half = factorial(n) / 2u32;
    let in_a = w == &Natural::from(1u32)
        || enumerate_partitions(n as usize).any(|l| {
            let d = sym_degree(&l);
            if d == Natural::from(1u32) {
                return false;
            }
            let dim = if l.is_self_conjugate() { d / 2u32 } else { d };
            &half % &dim == Natural::from(0u32) && &(&half / &dim) == w
        });
    in_h && !in_a
}

fn rows(target: &str) -> Vec<ExceptionRow> {
    sweep_target(&Catalog::embedded(), target, DEFAULT_N_CAP)
        .unwrap()
        .rows
}

#[test]
fn psl_table() {
    let got: Vec<(u32, String, u64)> = rows("psl")
        .into_iter()
        .map(|r| (r.m.unwrap(), r.q.unwrap().to_string(), r.n))
        .collect();
    let expected = [
        (1, "4", 5),
        (1, "4", 6),
        (1, "8", 7),
        (1, "9", 6),
        (1, "9", 7),
        (1, "5", 5),
        (1, "5", 6),
        (1, "7", 7),
        (2, "4", 8),
        (2, "4", 9),
        (3, "2", 8),
        (3, "2", 9),
    ];
    let expected: Vec<(u32, String, u64)> = expected
        .iter()
        .map(|&(m, q, n)| (m, q.to_string(), n))
        .collect();
    assert_eq!(got, expected);
}

#[test]
fn omega_and_psu_tables() {
    let key = |r: &ExceptionRow| (r.m.unwrap(), r.q.clone().unwrap(), r.n);
    assert_eq!(
        rows("omega").iter().map(key).collect::<Vec<_>>(),
        vec![(2, Natural::from(3u32), 9)]
    );
    assert_eq!(
        rows("psu").iter().map(key).collect::<Vec<_>>(),
        vec![(2, Natural::from(3u32), 9), (3, Natural::from(2u32), 9)]
    );
    for t in ["psp", "oplus", "ominus"] {
        assert!(rows(t).is_empty(), "{t}");
    }
}

#[test]
fn exceptional_families_are_empty() {
    let c = Catalog::embedded();
    for f in Family::EXCEPTIONAL {
        let r = sweep_family(&c, f, DEFAULT_N_CAP).unwrap();
        assert!(r.rows.is_empty(), "{f}");
        assert!(r.is_clean(), "{f}");
    }
    let e6 = derive_family_bounds(&c, Family::E6).unwrap();
    assert_eq!(e6.minimal_point, "E6(2)");
    assert!(!e6.minimal_point_feasible);
    assert_eq!(e6.derived, FamilyBounds::EMPTY);
    let g2 = derive_family_bounds(&c, Family::G2).unwrap();
    assert_eq!(g2.minimal_point, "G2(2)'");
    assert_eq!(
        c.group_order(&"G2(2)'".parse().unwrap()).unwrap(),
        Natural::from(6048u32)
    );
    let sz = derive_family_bounds(&c, Family::Suzuki).unwrap();
    assert_eq!(sz.derived.m_max, Some(4));
}

#[test]
fn bound_boxes_where_they_agree() {
    let c = Catalog::embedded();
    let d = |f| derive_family_bounds(&c, f).unwrap().derived;
    let b = |m, p, k| FamilyBounds {
        m_max: Some(m),
        p_max: Some(p),
        k_max: Some(k),
    };
    assert_eq!(d(Family::OPlus), b(4, 2, 1));
    assert_eq!(d(Family::Psp), b(4, 2, 2));
    // The published PSL box is larger; every feasible point lies inside ours.
    let psl = d(Family::Psl);
    assert!(psl.m_max <= Some(6) && psl.p_max <= Some(17) && psl.k_max <= Some(63));
}

#[test]
fn boxes_are_closed() {
    let c = Catalog::embedded();
    for f in Family::all() {
        let r = sweep_family(&c, f, DEFAULT_N_CAP).unwrap();
        assert!(
            r.frontier_breaches.is_empty(),
            "{f}: {:?}",
            r.frontier_breaches
        );
        assert!(
            r.p_part_violations.is_empty(),
            "{f}: {:?}",
            r.p_part_violations
        );
        assert!(r.cap_hits.is_empty(), "{f}");
    }
}

#[test]
fn sporadic_single_survivor() {
    let c = Catalog::embedded();
    let r = sweep_sporadic(&c, DEFAULT_N_CAP).unwrap();
    assert_eq!(r.rows.len(), 1);
    let row = &r.rows[0];
    assert_eq!(
        (row.group.label().as_str(), row.n, row.ratio.clone()),
        ("J2", 10, Natural::from(3u32))
    );
    assert_eq!(row.verdict, Verdict::SubsetRefuted);
    assert!(witness_is_valid(
        &c,
        &row.group,
        row.n,
        row.witness.as_ref().unwrap()
    ));
}

#[test]
fn survivors_discharged_with_verified_witnesses() {
    let c = Catalog::embedded();
    let mut isomorphic = Vec::new();
    for t in ["psl", "omega", "psu"] {
        for r in rows(t) {
            match r.verdict {
                Verdict::Isomorphic => isomorphic.push(format!("{}/A{}", r.group, r.n)),
                Verdict::SubsetRefuted => {
                    assert!(
                        witness_is_valid(&c, &r.group, r.n, r.witness.as_ref().unwrap()),
                        "{} A{}",
                        r.group,
                        r.n
                    )
                }
                v => panic!("{} in A{}: {v}", r.group, r.n),
            }
        }
    }
    isomorphic.sort();
    assert_eq!(
        isomorphic,
        ["PSL(2,4)/A5", "PSL(2,5)/A5", "PSL(2,9)/A6", "PSL(4,2)/A8"]
    );
}

#[test]
fn rows_match_golden_files() {
    let c = Catalog::embedded();
    for t in GOLDEN_TARGETS {
        assert_eq!(
            sweep_target(&c, t, DEFAULT_N_CAP).unwrap().rows_csv(),
            golden_csv(t),
            "{t}"
        );
    }
}

#[test]
fn unresolved_without_degree_data() {
    let c = Catalog::embedded().without("PSL(2,7)");
    let r = sweep_family(&c, Family::Psl, DEFAULT_N_CAP).unwrap();
    let row = r
        .rows
        .iter()
        .find(|r| r.group.label() == "PSL(2,7)")
        .unwrap();
    assert_eq!(row.verdict, Verdict::Unresolved);
    assert!(!r.is_clean());
    let master = run_full_verification(&c, &VerifyConfig::default()).unwrap();
    assert!(!master.pass);
    assert!(master
        .failed_checks()
        .any(|ch| ch.name == "psl: survivors discharged"));
    assert!(matches!(
        check_subset(&c, &"PSL(2,7)".parse().unwrap(), 7),
        Err(Error::MissingData(_))
    ));
}

#[test]
fn full_verification_passes() {
    let report = run_full_verification(&Catalog::embedded(), &VerifyConfig::default()).unwrap();
    let failed: Vec<_> = report.failed_checks().collect();
    assert!(report.pass, "{failed:?}");
    assert_eq!(report.families.len(), 16);
    assert_eq!(report.schur.solutions, vec![9]);
}

#[test]
fn missing_double_cover_is_an_error() {
    let c = Catalog::embedded().without("2.A9");
    match run_full_verification(&c, &VerifyConfig::default()) {
        Err(Error::MissingData(label)) => assert_eq!(label, "2.A9"),
        other => panic!("{:?}", other.map(|r| r.pass)),
    }
}

#[test]
fn identical_across_thread_counts() {
    let c = Catalog::embedded();
    let run = |threads| {
        let pool = ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap();
        pool.install(|| {
            serde_json::to_string(&run_full_verification(&c, &VerifyConfig::default()).unwrap())
                .unwrap()
        })
    };
    let one = run(1);
    assert_eq!(one, run(8));
    assert_eq!(one, run(3));
}
