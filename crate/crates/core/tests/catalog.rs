use codlab_core::catalog::{
    legendre_n_min, q_part_exponent, Catalog, Family, GroupId, Sporadic, DATA_ENV,
};
use codlab_core::exactnum::{divides, valuation, Natural};
use codlab_core::search::{derive_family_bounds, search_n_min};
use codlab_core::{alt_codegree_set, Error};

fn g(s: &str) -> GroupId {
    s.parse().unwrap()
}

fn nat(x: u64) -> Natural {
    Natural::from(x)
}

#[test]
fn orders_agree_with_isomorphisms() {
    let c = Catalog::embedded();
    let o = |s: &str| c.group_order(&g(s)).unwrap();
    assert_eq!(o("A10"), nat(1_814_400));
    assert_eq!(o("J2"), nat(604_800));
    for s in ["PSL(2,4)", "PSL(2,5)", "A5"] {
        assert_eq!(o(s), nat(60), "{s}");
    }
    assert_eq!(o("PSL(2,9)"), o("A6"));
    assert_eq!(o("PSL(4,2)"), o("A8"));
    assert_eq!(o("PSU(4,2)"), o("Omega(5,3)"));
    assert_eq!(o("PSU(4,2)"), nat(25_920));
    assert_eq!(o("G2(2)'"), nat(6048));
}

#[test]
fn q_part_is_the_p_part_across_the_sweep_boxes() {
    let c = Catalog::embedded();
    let mut checked = 0;
    for family in Family::all() {
        let b = derive_family_bounds(&c, family).unwrap().derived;
        let (Some(p_max), Some(k_max)) = (b.p_max, b.k_max) else {
            continue;
        };
        let m_range = b.m_max.map_or(0..=0, |m| 0..=m + 1);
        for m in m_range {
            for p in [2u64, 3, 5, 7, 11, 13]
                .into_iter()
                .filter(|&p| p <= p_max + 1)
            {
                for k in 1..=k_max + 1 {
                    let Ok(q) = codlab_core::PrimePower::new(p, k) else {
                        continue;
                    };
                    let Ok(grp) = family.member(m, q) else {
                        continue;
                    };
                    let e = q_part_exponent(&grp).unwrap();
                    let v = valuation(&c.group_order(&grp).unwrap(), grp.q().unwrap().p()).unwrap();
                    assert_eq!(v, u64::from(e) * u64::from(grp.q().unwrap().k()), "{grp}");
                    let q = grp.q().unwrap();
                    assert_eq!(
                        legendre_n_min(&grp).unwrap(),
                        u64::from(e) * u64::from(q.k()) * (q.p() - 1)
                    );
                    assert_eq!(
                        search_n_min(&grp).unwrap(),
                        legendre_n_min(&grp).unwrap().max(5)
                    );
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 100, "{checked}");
}

#[test]
fn degree_records_are_consistent() {
    let c = Catalog::embedded();
    let mut with_degrees = 0;
    for r in c.records() {
        if r.degrees.is_empty() {
            continue;
        }
        with_degrees += 1;
        let sq: Natural = r.degrees.iter().map(|d| d * d).sum();
        if r.faithful_only {
            assert_eq!(sq * 2u32, r.order, "{}", r.group_label);
        } else {
            assert_eq!(sq, r.order, "{}", r.group_label);
        }
        for d in &r.degrees {
            assert!(divides(d, &r.order).unwrap());
        }
        let Ok(grp) = r.group_label.parse::<GroupId>() else {
            continue;
        };
        if grp.is_lie_type() || matches!(grp, GroupId::Sporadic(_)) {
            let bound = c.class_number_bound(&grp).unwrap();
            assert!(
                bound.cmp_natural(&nat(r.degrees.len() as u64)).is_ge(),
                "{grp}"
            );
            let cod = c.simple_codegree_set(&grp).unwrap();
            assert!(cod.values().iter().all(|v| divides(v, &cod.order).unwrap()));
        }
    }
    assert!(with_degrees >= 17);
}

#[test]
fn codegree_examples() {
    let c = Catalog::embedded();
    let vals = |s: &str| c.simple_codegree_set(&g(s)).unwrap().values().to_vec();
    assert_eq!(vals("PSL(2,7)"), [1u64, 21, 24, 28, 56].map(nat).to_vec());
    assert_eq!(
        vals("PSL(4,2)"),
        alt_codegree_set(8).unwrap().values().to_vec()
    );
    assert_eq!(vals("A8").len(), 11);
    assert_eq!(c.class_number_bound(&g("J2")).unwrap().to_string(), "21");
}

#[test]
fn every_sporadic_has_order_and_class_number() {
    let c = Catalog::embedded();
    for s in Sporadic::ALL {
        let grp = GroupId::Sporadic(s);
        assert!(c.group_order(&grp).unwrap() > nat(7000));
        assert!(c.class_number_bound(&grp).is_ok());
    }
}

#[test]
fn twisted_double_cover() {
    let c = Catalog::embedded();
    let two = c.twisted_codegree_set_2a9().unwrap();
    let a9 = alt_codegree_set(9).unwrap();
    assert_ne!(two.len(), a9.len());
    assert!(a9.is_subset_of(&two));
    assert!(c.record("2.A9").unwrap().degrees.contains(&nat(8)));
    match c.without("2.A9").twisted_codegree_set_2a9() {
        Err(Error::MissingData(l)) => assert_eq!(l, "2.A9"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn data_file_round_trips_and_env_override() {
    let c = Catalog::embedded();
    let text = c.to_json();
    let back = Catalog::from_json(&text).unwrap();
    assert_eq!(back.to_json(), text);

    let dir = std::env::temp_dir().join(format!("codlab-data-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("groups.json");
    std::fs::write(&path, c.without("J2").to_json()).unwrap();
    let loaded = Catalog::from_path(&path).unwrap();
    assert!(loaded.record("J2").is_none());
    // SAFETY-free: the variable is only read by this test in this process.
    std::env::set_var(DATA_ENV, &path);
    let via_env = Catalog::load().unwrap();
    std::env::remove_var(DATA_ENV);
    assert!(via_env.record("J2").is_none());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn malformed_data_is_rejected() {
    assert!(Catalog::from_json("{}").is_err());
    let c = Catalog::embedded();
    let broken = c.to_json().replacen("\"604800\"", "\"604801\"", 1);
    assert!(Catalog::from_json(&broken).is_err());
}
