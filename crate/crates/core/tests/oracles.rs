//! Exhaustive comparisons against the direct implementations in `common`.

mod common;

use std::collections::BTreeSet;

use common::*;
use num_bigint::BigUint;
use seqcong::count::{count_into_powers, count_members, count_parity_ideal};
use seqcong::enumerate::{
    enumerate_partitions, enumerate_seqcong_by_largest, enumerate_seqcong_by_size,
    enumerate_with_parts_from, Predicate,
};
use seqcong::general::{
    eta, is_in_sba, is_in_sk, n_decode, n_encode, pi_prime_ab, power_lowering, psi_k, sigma_ab,
    sigma_prime_ab, tau, GenSpec, NNotation, Sequence,
};
use seqcong::ideal::{
    andrews_compose, andrews_decompose, check_ideal_closure, check_modulus, compute_l,
    infer_linking, is_member, is_weak_order_witness, maximality_witness, order_estimate,
    weak_order_estimate, AnalysisBound, IdealSpec, LinkVerdict, OrderEstimate,
};
use seqcong::partition::{conjugate, FrequencyMap, Partition};
use seqcong::seqcong::{
    from_c_notation, is_seq_congruent, pi_map, pi_sigma_closed_form, psi_inverse, psi_map,
    sigma_map, to_c_notation,
};

fn part(v: &[u64]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn all_upto(n: u64) -> Vec<Partition> {
    naive_partitions_upto(n).iter().map(|v| part(v)).collect()
}

#[test]
fn conjugation_matches_transpose() {
    for p in all_upto(14) {
        let c = conjugate(&p);
        assert_eq!(c.parts(), transpose_conjugate(p.parts()).as_slice(), "{p}");
        assert_eq!(conjugate(&c), p);
    }
}

#[test]
fn frequency_round_trip() {
    for p in all_upto(14) {
        let f = FrequencyMap::from(&p);
        assert_eq!(f.to_partition().unwrap(), p);
        assert_eq!(
            f.iter().map(|(part, freq)| part * freq).sum::<u64>(),
            p.size()
        );
    }
}

#[test]
fn enumerator_matches_naive_generator() {
    for n in 0..=12 {
        let listed: Vec<Vec<u64>> = enumerate_partitions(n)
            .into_iter()
            .map(Partition::into_parts)
            .collect();
        let naive = naive_partitions(n);
        let as_set: BTreeSet<Vec<u64>> = listed.iter().cloned().collect();
        assert_eq!(as_set.len(), listed.len(), "duplicates at n = {n}");
        assert_eq!(as_set, naive);
        // Reverse lexicographic: the naive set iterated backwards.
        assert!(listed.iter().eq(naive.iter().rev()));
    }
}

#[test]
fn restricted_enumerator_matches_filter() {
    let allowed = [1u64, 3, 4, 9];
    for n in 0..=14 {
        let listed: BTreeSet<Vec<u64>> = enumerate_with_parts_from(&allowed, n)
            .into_iter()
            .map(Partition::into_parts)
            .collect();
        let filtered: BTreeSet<Vec<u64>> = naive_partitions(n)
            .into_iter()
            .filter(|p| p.iter().all(|x| allowed.contains(x)))
            .collect();
        assert_eq!(listed, filtered);
    }
}

#[test]
fn seqcong_enumerators_match_filter() {
    for n in 0..=20 {
        let by_size: BTreeSet<Vec<u64>> = enumerate_seqcong_by_size(n)
            .into_iter()
            .map(Partition::into_parts)
            .collect();
        let filtered: BTreeSet<Vec<u64>> = naive_partitions(n)
            .into_iter()
            .filter(|p| seqcong_by_definition(p))
            .collect();
        assert_eq!(by_size, filtered, "n = {n}");
    }
    for n in 0..=14 {
        let by_largest = enumerate_seqcong_by_largest(n);
        assert_eq!(by_largest.len(), naive_partitions(n).len());
        assert!(by_largest
            .iter()
            .all(|p| p.largest() == n && seqcong_by_definition(p.parts())));
        let distinct: BTreeSet<&Partition> = by_largest.iter().collect();
        assert_eq!(distinct.len(), by_largest.len());
    }
}

#[test]
fn seqcong_predicate_matches_definition() {
    for p in all_upto(20) {
        assert_eq!(
            is_seq_congruent(&p),
            seqcong_by_definition(p.parts()),
            "{p}"
        );
    }
}

#[test]
fn c_notation_round_trip() {
    for n in 0..=40 {
        for p in enumerate_seqcong_by_size(n) {
            let c = to_c_notation(&p).unwrap();
            assert_eq!(from_c_notation(&c).unwrap(), p);
            let weighted: u64 = c
                .coeffs()
                .iter()
                .enumerate()
                .map(|(i, &x)| (i as u64 + 1).pow(2) * x)
                .sum();
            assert_eq!(weighted, n);
        }
    }
}

#[test]
fn pi_and_sigma_match_geometric_oracles() {
    for p in all_upto(14) {
        let image = pi_map(&p).unwrap();
        assert_eq!(image.parts(), stretch_columns(p.parts()).as_slice(), "π{p}");
        assert_eq!(image.largest(), p.size());
        let back = sigma_map(&image).unwrap();
        assert_eq!(
            back.parts(),
            peel_squares(image.parts()).unwrap().as_slice()
        );
        assert_eq!(back, conjugate(&p), "σ(π{p})");
    }
}

#[test]
fn pi_is_a_bijection_onto_largest_part_n() {
    for n in 0..=12 {
        let images: Vec<Partition> = enumerate_partitions(n)
            .iter()
            .map(|p| pi_map(p).unwrap())
            .collect();
        let distinct: BTreeSet<Partition> = images.iter().cloned().collect();
        assert_eq!(distinct.len(), images.len(), "collision at n = {n}");
        let target: BTreeSet<Partition> = enumerate_seqcong_by_largest(n).into_iter().collect();
        assert_eq!(distinct, target);
    }
}

#[test]
fn pi_sigma_closed_form_agrees() {
    for n in 0..=18 {
        for phi in enumerate_seqcong_by_largest(n) {
            let direct = pi_map(&sigma_map(&phi).unwrap()).unwrap();
            assert_eq!(pi_sigma_closed_form(&phi).unwrap(), direct, "{phi}");
        }
    }
}

#[test]
fn psi_is_a_size_preserving_bijection_onto_squares() {
    for n in 0..=30 {
        let images: BTreeSet<Partition> = enumerate_seqcong_by_size(n)
            .iter()
            .map(|p| {
                let image = psi_map(p).unwrap();
                assert_eq!(image.size(), n);
                assert_eq!(psi_inverse(&image).unwrap(), *p);
                image
            })
            .collect();
        let squares: BTreeSet<Partition> = naive_partitions(n)
            .into_iter()
            .filter(|p| p.iter().all(|&x| is_square(x)))
            .map(|p| part(&p))
            .collect();
        assert_eq!(images, squares, "n = {n}");
    }
}

#[test]
fn conjugate_frequencies_of_seqcong_are_multiples() {
    for n in 0..=30 {
        for p in enumerate_seqcong_by_size(n) {
            for (value, freq) in conjugate(&p).frequencies().iter() {
                assert_eq!(freq % value, 0, "{p}");
            }
        }
    }
}

#[test]
fn classical_specialization() {
    let s = GenSpec::classical();
    for p in all_upto(20) {
        assert_eq!(pi_prime_ab(&p, &s).unwrap(), pi_map(&p).unwrap());
        let seq = is_seq_congruent(&p);
        assert_eq!(is_in_sba(&p, &s).unwrap(), seq);
        if seq {
            assert_eq!(sigma_prime_ab(&p, &s).unwrap(), sigma_map(&p).unwrap());
            let n = n_encode(&p, &s).unwrap();
            assert_eq!(n.coeffs(), to_c_notation(&p).unwrap().coeffs());
            assert_eq!(sigma_ab(&n).unwrap(), sigma_map(&p).unwrap());
            let n1 = n.retagged(GenSpec::new(Sequence::Powers(1), Sequence::Naturals).unwrap());
            assert_eq!(psi_k(&n1, 1).unwrap(), psi_map(&p).unwrap());
        }
    }
}

fn sample_specs() -> Vec<GenSpec> {
    [
        ("nat", "nat"),
        ("arith:2", "nat"),
        ("arith:3", "pow:2"),
        ("pow:2", "arith:2"),
        ("2,5,7,11", "1,3,4,8"),
        ("pow:0", "nat"),
    ]
    .iter()
    .map(|(a, b)| GenSpec::new(a.parse().unwrap(), b.parse().unwrap()).unwrap())
    .collect()
}

#[test]
fn stretch_then_flip_is_conjugation() {
    for s in sample_specs() {
        for p in all_upto(12) {
            if p.len() > 4 && matches!(s.a(), Sequence::Explicit(_)) {
                continue;
            }
            let image = pi_prime_ab(&p, &s).unwrap();
            assert!(is_in_sba(&image, &s).unwrap());
            assert_eq!(
                sigma_prime_ab(&image, &s).unwrap(),
                conjugate(&p),
                "{s}: {p}"
            );
        }
    }
}

#[test]
fn arithmetic_a_scales_largest_part() {
    for a in 1..=3u64 {
        for b in ["nat", "pow:2", "arith:2"] {
            let s = GenSpec::new(Sequence::Arithmetic(a), b.parse().unwrap()).unwrap();
            for p in all_upto(12) {
                let image = pi_prime_ab(&p, &s).unwrap();
                assert_eq!(image.largest(), a * p.size());
                assert_eq!(
                    sigma_prime_ab(&image, &s).unwrap().size(),
                    image.largest() / a
                );
            }
        }
    }
}

#[test]
fn sba_membership_matches_encoding() {
    for s in sample_specs() {
        for p in all_upto(14) {
            let by_conjugate = is_in_sba(&p, &s);
            let by_encoding = n_encode(&p, &s);
            match (by_conjugate, by_encoding) {
                (Ok(true), Ok(n)) => assert_eq!(n_decode(&n).unwrap(), p),
                (Ok(false), Err(_)) => {}
                // Explicit sequences run out; both sides must notice.
                (Err(_), Err(_)) => {}
                (x, y) => panic!("{s}: {p}: {x:?} vs {y:?}"),
            }
        }
    }
}

/// `S_{ℕ^p}(ℕ^{k−p})` members of size `n`, by filtering all partitions.
fn sba_count(n: u64, s: &GenSpec) -> usize {
    naive_partitions(n)
        .iter()
        .filter(|p| is_in_sba(&part(p), s).unwrap())
        .count()
}

#[test]
fn eta_and_tau_are_size_respecting_bijections() {
    for k in 1..=3u32 {
        let source = GenSpec::new(Sequence::Powers(k), Sequence::Naturals).unwrap();
        let weight = |i: u64| i.pow(k);
        for n in 0..=25u64 {
            let vectors = weighted_vectors(n, &weight);
            for p in 1..=k {
                let target = GenSpec::powers(k - p, p).unwrap();
                let mut images = BTreeSet::new();
                for v in &vectors {
                    let x = NNotation::new(source.clone(), v.clone()).unwrap();
                    assert_eq!(n_decode(&x).unwrap().largest(), n);
                    let y = eta(&x, k, p).unwrap();
                    assert_eq!(y.coeffs(), x.coeffs());
                    let decoded = n_decode(&y).unwrap();
                    assert_eq!(decoded.size(), n);
                    images.insert(decoded);
                    for q in 1..=k {
                        let z = tau(&y, k, p, q).unwrap();
                        assert_eq!(z.coeffs(), x.coeffs());
                        assert_eq!(n_decode(&z).unwrap().size(), n);
                    }
                }
                assert_eq!(images.len(), vectors.len());
                assert_eq!(images.len(), sba_count(n, &target), "k={k} p={p} n={n}");
            }
        }
    }
}

#[test]
fn power_lowering_matches_counts() {
    for k in 1..=2u32 {
        let target = GenSpec::new(Sequence::Powers(k), Sequence::Naturals).unwrap();
        for b in ["nat", "pow:2"] {
            let source = GenSpec::new(Sequence::Powers(k + 1), b.parse().unwrap()).unwrap();
            let weight = |i: u64| i.pow(k + 1);
            for n in 0..=20u64 {
                let mut images = BTreeSet::new();
                for v in weighted_vectors(n, &weight) {
                    let x = NNotation::new(source.clone(), v).unwrap();
                    assert_eq!(n_decode(&x).unwrap().largest(), n);
                    let y = power_lowering(&x, k).unwrap();
                    assert_eq!(y.coeffs(), x.coeffs());
                    let decoded = n_decode(&y).unwrap();
                    assert_eq!(decoded.size(), n);
                    assert!(is_in_sba(&decoded, &target).unwrap());
                    images.insert(decoded);
                }
                assert_eq!(images.len(), sba_count(n, &target), "k={k} B={b} n={n}");
            }
        }
    }
}

#[test]
fn sk_counts_match_power_products() {
    for k in 1..=2u32 {
        for n in 0..=30 {
            let brute = brute_count(n, |p| is_in_sk(&part(p), k));
            assert_eq!(
                BigUint::from(brute),
                count_into_powers(n, k + 1).unwrap(),
                "k={k} n={n}"
            );
        }
    }
}

#[test]
fn seqcong_counts_match_square_counts() {
    for n in 0..=40 {
        let seq = brute_count(n, seqcong_by_definition);
        let squares = brute_count(n, |p| p.iter().all(|&x| is_square(x)));
        assert_eq!(seq, squares);
        assert_eq!(BigUint::from(seq), count_into_powers(n, 2).unwrap());
        if n <= 25 {
            assert_eq!(count_members(&Predicate::SeqCong, n), BigUint::from(seq));
        }
    }
}

#[test]
fn parity_count_matches_brute_force() {
    for n in 0..=30 {
        let brute = brute_count(n, |p| p.iter().all(|x| x % 2 == p[0] % 2));
        assert_eq!(count_parity_ideal(n), BigUint::from(brute), "n = {n}");
        assert_eq!(
            count_members(&Predicate::Ideal(IdealSpec::PParity), n),
            BigUint::from(brute)
        );
    }
}

#[test]
fn member_counts_match_brute_force() {
    let preds = [
        "all", "seqcong", "squares", "powers:3", "sk:2", "sjk:1:1", "selfconj", "R", "D", "Adiff",
    ];
    for tag in preds {
        let pred: Predicate = tag.parse().unwrap();
        for n in 0..=16 {
            let brute = naive_partitions(n).iter().filter(|p| pred.test(p)).count() as u64;
            assert_eq!(count_members(&pred, n), BigUint::from(brute), "{tag} n={n}");
        }
    }
}

#[test]
fn sa_divisibility_matches_lcm_congruences() {
    let b = AnalysisBound::new(60, 5).unwrap();
    b.visit(&mut |p| {
        assert_eq!(IdealSpec::SA.contains(p), sa_by_lcm_congruences(p), "{p:?}");
    });
}

#[test]
fn sa_inside_s_inside_rprime() {
    for p in all_upto(30) {
        let parts = p.parts();
        if IdealSpec::SA.contains(parts) {
            assert!(seqcong_by_definition(parts), "{p}");
        }
        if seqcong_by_definition(parts) {
            assert!(IdealSpec::RPrime.contains(parts), "{p}");
        }
    }
}

#[test]
fn closure_matches_exhaustive_removal() {
    let b = AnalysisBound::new(9, 5).unwrap();
    for s in IdealSpec::builtins() {
        // Removing any set of parts, not just one.
        let mut broken = false;
        b.visit(&mut |p| {
            if !s.contains(p) {
                return;
            }
            for mask in 0u32..(1 << p.len()) {
                let kept: Vec<u64> = (0..p.len())
                    .filter(|i| mask & (1 << i) == 0)
                    .map(|i| p[i])
                    .collect();
                broken |= !s.contains(&kept);
            }
        });
        assert_eq!(check_ideal_closure(&s, &b).is_closed(), !broken, "{s}");
        assert_eq!(broken, !s.is_ideal(), "{s}");
    }
}

#[test]
fn andrews_round_trip_and_pieces() {
    for p in all_upto(18).into_iter().filter(|p| p.largest() <= 18) {
        for m in 1..=6 {
            let pieces = andrews_decompose(&p, m).unwrap();
            assert_eq!(andrews_compose(&pieces, m).unwrap(), p);
            assert!(pieces.iter().all(|q| q.largest() <= m));
        }
    }
    let b = AnalysisBound::new(12, 6).unwrap();
    for (s, m) in [
        (IdealSpec::D, 1),
        (IdealSpec::R, 1),
        (IdealSpec::R, 2),
        (IdealSpec::SAMaxLen(2), 2),
        (IdealSpec::NMaxLen(3), 1),
    ] {
        assert!(check_modulus(&s, m, &b).holds(), "{s} mod {m}");
        let l = compute_l(&s, m, &b);
        b.visit(&mut |p| {
            if s.contains(p) {
                for piece in andrews_decompose(&part(p), m).unwrap() {
                    assert!(l.members().contains(&piece), "{s}: {p:?} gives {piece}");
                }
            }
        });
    }
}

#[test]
fn linked_ideals_have_finite_order() {
    let b = AnalysisBound::new(12, 6).unwrap();
    for s in IdealSpec::builtins()
        .into_iter()
        .filter(IdealSpec::is_ideal)
    {
        let order = order_estimate(&s, &b);
        let verdicts: Vec<LinkVerdict> =
            (1..=2).map(|m| infer_linking(&s, m, &b).verdict).collect();
        let linked = verdicts.contains(&LinkVerdict::LinkedWithinBound);
        if linked {
            assert!(
                matches!(order, OrderEstimate::Finite { .. }),
                "{s}: {order:?}"
            );
        }
        if matches!(order, OrderEstimate::GrowingWithBound { .. }) {
            assert!(!linked, "{s}");
        }
    }
}

#[test]
fn maximality_witnesses_leave_s() {
    for p in all_upto(30) {
        let parts = p.parts();
        if !seqcong_by_definition(parts) || IdealSpec::SA.contains(parts) {
            assert!(maximality_witness(&p).is_none());
            continue;
        }
        let w = maximality_witness(&p).unwrap();
        assert!(!seqcong_by_definition(w.parts()), "{p} -> {w}");
        // The witness is a contiguous run of p's parts.
        assert!(parts.windows(w.len()).any(|run| run == w.parts()));
        assert!(!is_member(&IdealSpec::SA, &p));
    }
}

#[test]
fn rprime_weak_order_grows() {
    // (2k, 2k−1, …, k) has k + 1 parts and smallest part k, so it is not a
    // member, while any k of its consecutive distinct parts form one.
    for k in 1..=8u64 {
        let run: Vec<u64> = (k..=2 * k).rev().collect();
        assert!(!rprime_by_definition(&run));
        for w in run.windows(k as usize) {
            assert!(rprime_by_definition(w));
        }
        assert!(is_weak_order_witness(&IdealSpec::RPrime, &run, k as usize));
    }
    let bound = AnalysisBound::new(16, 8).unwrap();
    assert!(matches!(
        weak_order_estimate(&IdealSpec::RPrime, &bound),
        OrderEstimate::GrowingWithBound {
            refuted_up_to: 7,
            ..
        }
    ));
}

fn rprime_by_definition(parts: &[u64]) -> bool {
    parts.iter().all(|&x| x >= parts.len() as u64)
}
