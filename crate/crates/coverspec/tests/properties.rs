//! Seeded property suites for the spec-level invariants that the unit
//! tests do not already pin down: fiber arithmetic, group invariants,
//! closure and pre-order laws, bound monotonicity, chained
//! specialization, and the criterion/nu-rk agreement.

mod common;

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use coverspec::classtable::{ClassTable, Tri};
use coverspec::covers::{invariants_prec, rh_invariants, strict_growth, RamificationData};
use coverspec::obstruction::{criterion_check, nu_rk_test, Catalog, CatalogEntry};
use coverspec::permgroup::{
    alt, cyclic_product, dihedral, psl2, quaternion8, sym, FiniteGroup,
};
use coverspec::qarith::{
    fiber_profile, global_ramification_weight, ratq, RatQ, P1Q,
};
use coverspec::ret::nielsen_count;
use coverspec::specialize::{specialize_cover, specialized_cover_data};

const SEED: u64 = 0x5EED;

#[test]
fn fiber_multiplicities_always_sum_to_degree() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..120 {
        let t0 = common::random_ratfunc(&mut rng, 8);
        for _ in 0..6 {
            let t = common::random_point(&mut rng);
            let profile = fiber_profile(&t0, &t);
            assert_eq!(profile.total(), t0.degree(), "t = {t}, T0 = {t0:?}");
        }
        assert_eq!(fiber_profile(&t0, &P1Q::Infinity).total(), t0.degree());
    }
}

#[test]
fn global_ramification_weight_is_bounded_by_rh() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    for _ in 0..150 {
        let t0 = common::random_ratfunc(&mut rng, 8);
        let w = global_ramification_weight(&t0);
        let n = t0.degree();
        assert!(w <= 2 * n - 2, "weight {w} > 2N-2 for {t0:?}");
        // over the algebraic closure the sphere-to-sphere count is sharp
        assert_eq!(w, 2 * n - 2);
    }
}

#[test]
fn fiber_profiles_are_moebius_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    for _ in 0..80 {
        let t0 = common::random_ratfunc(&mut rng, 6);
        let m = common::random_moebius(&mut rng);
        let composed = t0.compose(&m);
        for _ in 0..4 {
            let t = common::random_point(&mut rng);
            let a = fiber_profile(&t0, &t);
            let b = fiber_profile(&composed, &t);
            assert_eq!(a.shape(), b.shape(), "t = {t}");
        }
    }
}

#[test]
fn class_equation_holds_across_families() {
    for g in [
        sym(6).unwrap(),
        alt(6).unwrap(),
        psl2(7).unwrap(),
        psl2(13).unwrap(),
        dihedral(6).unwrap(),
        quaternion8().unwrap(),
    ] {
        let classes = g.conjugacy_classes();
        assert_eq!(classes.iter().map(|c| c.size).sum::<usize>(), g.order());
        for c in classes {
            assert_eq!(g.order() % c.size, 0);
        }
    }
}

#[test]
fn nu_of_nilpotent_groups_dominates_abelianization() {
    // nilpotent samples of order <= 512, abelianization by brute force
    let samples: Vec<FiniteGroup> = vec![
        quaternion8().unwrap(),
        dihedral(4).unwrap(),
        dihedral(8).unwrap(),
        dihedral(16).unwrap(),
        cyclic_product(&[4, 2]).unwrap(),
        cyclic_product(&[2, 2, 2]).unwrap(),
        cyclic_product(&[3, 3]).unwrap(),
        cyclic_product(&[9, 3]).unwrap(),
        cyclic_product(&[8, 4]).unwrap(),
        cyclic_product(&[16, 2]).unwrap(),
        cyclic_product(&[8, 8]).unwrap(),
        cyclic_product(&[16, 4, 2]).unwrap(),
        cyclic_product(&[27, 9]).unwrap(),
    ];
    for g in samples {
        assert!(g.order() <= 512);
        let (nu, _) = g.maximal_cyclic_classes();
        let derived = g.commutator_subgroup();
        let ab = g.quotient(&derived).unwrap();
        let (nu_ab, _) = ab.maximal_cyclic_classes();
        assert!(
            nu >= nu_ab,
            "nu = {nu} < nu(ab) = {nu_ab} for {:?}",
            g.kind()
        );
    }
}

#[test]
fn symmetric_groups_have_rank_two() {
    for n in 3..=7 {
        assert_eq!(sym(n).unwrap().rank().unwrap(), 2, "S{n}");
    }
}

#[test]
fn every_cyclic_subgroup_sits_in_a_maximal_one() {
    for g in [sym(5).unwrap(), dihedral(6).unwrap(), quaternion8().unwrap(), psl2(7).unwrap()] {
        let maximal = g.maximal_cyclic_subgroups();
        for e in 0..g.order() {
            let sub = g.cyclic_subgroup(e);
            let covered = maximal
                .iter()
                .any(|(m, _)| sub.iter().all(|x| m.binary_search(x).is_ok()));
            assert!(covered, "element {e} of {:?}", g.kind());
        }
    }
}

#[test]
fn psl2_has_two_equal_classes_of_order_p() {
    for p in [7u64, 13, 19] {
        let g = psl2(p).unwrap();
        let classes: Vec<_> = g
            .conjugacy_classes()
            .iter()
            .filter(|c| c.element_order == p as usize)
            .collect();
        assert_eq!(classes.len(), 2, "p = {p}");
        assert_eq!(classes[0].size, classes[1].size, "p = {p}");
    }
}

#[test]
fn very_different_is_symmetric_and_irreflexive() {
    for g in [sym(5).unwrap(), sym(6).unwrap(), psl2(7).unwrap()] {
        let t = ClassTable::from_group(&g);
        let nontrivial: Vec<usize> = (0..t.len()).filter(|&c| t.order_of(c) > 1).collect();
        for &a in &nontrivial {
            assert_eq!(t.very_different(a, a), Tri::False);
            for &b in &nontrivial {
                assert_eq!(t.very_different(a, b), t.very_different(b, a));
            }
        }
    }
}

#[test]
fn closures_divide_orders_and_match_brute_force() {
    for g in [sym(6).unwrap(), psl2(7).unwrap(), dihedral(5).unwrap()] {
        assert!(g.order() <= 2000);
        let t = ClassTable::from_group(&g);
        for c in 0..t.len() {
            for &m in &t.z_closure[c] {
                assert_eq!(t.order_of(c) % t.order_of(m), 0);
            }
        }
        // brute force: exponentiate every member of every class
        for c in g.conjugacy_classes() {
            let mut brute = std::collections::BTreeSet::new();
            for &m in &c.members {
                let e = g.element(m);
                let mut x = coverspec::permgroup::Perm::identity(g.degree());
                for _ in 0..c.element_order {
                    brute.insert(g.class_of_perm(&x).unwrap());
                    x = x.compose(e);
                }
            }
            assert_eq!(brute, t.z_closure[c.id]);
        }
    }
}

#[test]
fn tuple_prec_is_reflexive_and_transitive() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
    let g = sym(6).unwrap();
    let t = ClassTable::from_group(&g);
    let nontrivial: Vec<usize> = (0..t.len()).filter(|&c| t.order_of(c) > 1).collect();
    let random_tuple = |rng: &mut ChaCha8Rng| {
        let r = rng.gen_range(1..=4);
        let ids: Vec<usize> = (0..r)
            .map(|_| nontrivial[rng.gen_range(0..nontrivial.len())])
            .collect();
        t.tuple(&ids).unwrap()
    };
    for _ in 0..300 {
        let a = random_tuple(&mut rng);
        let b = random_tuple(&mut rng);
        let c = random_tuple(&mut rng);
        assert!(t.tuple_prec(&a, &a).unwrap().holds());
        if t.tuple_prec(&a, &b).unwrap().holds() && t.tuple_prec(&b, &c).unwrap().holds() {
            assert!(t.tuple_prec(&a, &c).unwrap().holds());
        }
    }
}

#[test]
fn rh_genus_matches_the_pointwise_sum() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 4);
    let mut done = 0;
    while done < 60 {
        let Some(data) = common::random_cover(&mut rng, 6, 8) else {
            continue;
        };
        let inv = rh_invariants(&data).unwrap();
        // independent route: 2g - 2 = -2d + sum_i (d - d/e_i)
        let d = data.d as i64;
        let sum: i64 = data.e.iter().map(|&e| d - d / e as i64).sum();
        assert_eq!(2 * inv.genus - 2, -2 * d + sum);
        done += 1;
    }
}

#[test]
fn invariants_prec_is_reflexive_and_transitive() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 5);
    let g = sym(5).unwrap();
    let table = Arc::new(ClassTable::from_group(&g));
    let nontrivial: Vec<usize> = (0..table.len()).filter(|&c| table.order_of(c) > 1).collect();
    let random_data = |rng: &mut ChaCha8Rng| {
        let r = rng.gen_range(1..=4);
        let ids: Vec<usize> = (0..r)
            .map(|_| nontrivial[rng.gen_range(0..nontrivial.len())])
            .collect();
        let tuple = table.tuple(&ids).unwrap();
        RamificationData::new(table.clone(), g.order(), tuple, None).unwrap()
    };
    for _ in 0..200 {
        let a = random_data(&mut rng);
        let b = random_data(&mut rng);
        let c = random_data(&mut rng);
        assert!(invariants_prec(&a, &a, true).unwrap().holds());
        if invariants_prec(&a, &b, true).unwrap().holds()
            && invariants_prec(&b, &c, true).unwrap().holds()
        {
            assert!(invariants_prec(&a, &c, true).unwrap().holds());
        }
    }
}

#[test]
fn strict_growth_is_monotone() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 6);
    for _ in 0..500 {
        let r = rng.gen_range(2..=6);
        let eps = ratq(rng.gen_range(1..=16), rng.gen_range(1..=8));
        let n = rng.gen_range(2..=7);
        let proper = rng.gen_bool(0.5);
        let base = strict_growth(r, &eps, n, proper);
        // monotone in N
        if base {
            assert!(strict_growth(r, &eps, n + 1, proper));
        }
        // antitone in epsilon
        let smaller = &eps - ratq(1, 17);
        if base && smaller > RatQ::from_integer(0.into()) {
            assert!(strict_growth(r, &smaller, n, proper));
        }
    }
}

#[test]
fn chained_specialization_composes() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 7);
    let mut chained = 0usize;
    let mut attempts = 0usize;
    while chained < 25 && attempts < 4000 {
        attempts += 1;
        let Some(data) = common::random_cover(&mut rng, 4, 6) else {
            continue;
        };
        let t0 = common::random_ratfunc(&mut rng, 3);
        let t1 = common::random_ratfunc(&mut rng, 2);
        let first = specialize_cover(&data, &t0).unwrap();
        // chain only when the intermediate cover has rational branch points
        let Some(mid) = specialized_cover_data(&first, &data) else {
            continue;
        };
        if mid.r() == 0 {
            continue;
        }
        let Ok(second) = specialize_cover(&mid, &t1) else {
            continue;
        };
        let direct = specialize_cover(&data, &t0.compose(&t1)).unwrap();
        assert_eq!(direct.r_t0, second.r_t0, "branch point counts differ");
        assert_eq!(
            direct.survivor_signature(),
            second.survivor_signature(),
            "survivor class multisets differ"
        );
        chained += 1;
    }
    assert!(chained >= 25, "only {chained} chained instances");
}

#[test]
fn abelian_nielsen_count_is_zero_or_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 8);
    for _ in 0..60 {
        let ds: Vec<usize> = (0..rng.gen_range(1..=2))
            .map(|_| rng.gen_range(2..=6))
            .collect();
        let g = cyclic_product(&ds).unwrap();
        let nontrivial: Vec<usize> = g
            .conjugacy_classes()
            .iter()
            .filter(|c| c.element_order > 1)
            .map(|c| c.id)
            .collect();
        if nontrivial.is_empty() {
            continue;
        }
        let r = rng.gen_range(2..=4);
        let classes: Vec<usize> = (0..r)
            .map(|_| nontrivial[rng.gen_range(0..nontrivial.len())])
            .collect();
        let count = nielsen_count(&g, &classes).unwrap();
        // abelian: classes are singletons, so the tuple is unique if the
        // product closes and the entries generate
        let ids: Vec<usize> = classes
            .iter()
            .map(|&c| g.conjugacy_classes()[c].members[0])
            .collect();
        let mut prod = ids[0];
        for &x in &ids[1..] {
            prod = g.mul(prod, x);
        }
        let expected = usize::from(
            g.element(prod).is_identity() && g.generates(&ids),
        );
        assert_eq!(count, expected);
    }
}

#[test]
fn criterion_agrees_with_nu_rk_on_instantiated_catalogs() {
    // R built as in the corollary proof: one tuple with rank+1 entries,
    // one tuple listing every nontrivial class
    for g in [
        sym(4).unwrap(),
        sym(6).unwrap(),
        alt(4).unwrap(),
        alt(5).unwrap(),
        quaternion8().unwrap(),
        cyclic_product(&[3, 3]).unwrap(),
    ] {
        let nu_rk = nu_rk_test(&g).unwrap();
        let table = Arc::new(ClassTable::from_group(&g));
        let nontrivial: Vec<usize> =
            (0..table.len()).filter(|&c| table.order_of(c) > 1).collect();
        let rank = g.rank().unwrap();
        if nontrivial.len() < rank + 1 {
            continue;
        }
        let (_, max_cyc_reps) = g.maximal_cyclic_classes();
        // r = rank + 1 entries drawn from maximal cyclic generator classes
        let l1_ids: Vec<usize> = (0..rank + 1)
            .map(|i| max_cyc_reps[i % max_cyc_reps.len()])
            .collect();
        let e1 = CatalogEntry {
            classes: table.tuple(&l1_ids).unwrap(),
            class_names: l1_ids.iter().map(|&c| table.name_of(c).to_string()).collect(),
            source: "synthetic corollary instantiation".into(),
        };
        let e2 = CatalogEntry {
            classes: table.tuple(&nontrivial).unwrap(),
            class_names: nontrivial
                .iter()
                .map(|&c| table.name_of(c).to_string())
                .collect(),
            source: "all nontrivial classes".into(),
        };
        let catalog = Catalog::new(table, vec![e1, e2]);
        let crit = criterion_check(&catalog).unwrap();
        assert_eq!(
            crit.obstructed(),
            nu_rk.obstructed(),
            "{:?}: criterion vs nu_rk",
            g.kind()
        );
    }
}

#[test]
fn survivor_loci_stay_consistent_with_counts() {
    // p + q equals the number of distinct surviving points, degree-summed
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 9);
    let mut done = 0;
    while done < 60 {
        let Some(data) = common::random_cover(&mut rng, 5, 6) else {
            continue;
        };
        let t0 = common::random_ratfunc(&mut rng, 5);
        let report = specialize_cover(&data, &t0).unwrap();
        let by_counts: usize = report.per_branch.iter().map(|b| b.p + b.q).sum();
        let by_survivors: usize = report.survivors.iter().map(|s| s.degree).sum();
        assert_eq!(by_counts, by_survivors);
        assert_eq!(by_counts, report.r_t0);
        for s in &report.survivors {
            assert!(s.inertia_order > 1);
            let e = data.e[s.branch_index];
            assert_eq!(s.inertia_order, e / common::gcd(e, s.alpha));
        }
        done += 1;
    }
}
