//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use bentkit::analyze::{
    classify_exponents, constant_on, constant_on_cells, CharacterSums, SumKind,
};
use bentkit::boolfun::{anf_degree, bent_dual, fwht, walsh_spectrum, PairingSpec, TruthTable};
use bentkit::construct::{
    carlet, default_pi, mm, partition_bent, psap, spread_construction, trace_family, Assignment,
    CarletKind, ExponentPair, SpreadVariant, TraceVariant,
};
use bentkit::gf::{make_field, FieldElement, FieldSpec};
use bentkit::groupfun::{
    affine_space_check, affine_space_check_at, gen_walsh, is_generalized_bent, is_group_bent,
    GroupFunction, GroupSpec,
};
use bentkit::spread::{desarguesian, gamma_partition, preimage_partition, GammaCells, Side};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn ok<T, E: std::fmt::Debug>(r: std::result::Result<T, E>) -> std::result::Result<T, String> {
    r.map_err(|e| format!("{e:?}"))
}

fn within(start: Instant, limit: Duration, what: &str) -> std::result::Result<(), String> {
    let took = start.elapsed();
    ensure!(took <= limit, "{what} took {took:.1?}, limit {limit:?}");
    Ok(())
}

fn set(v: &[u64]) -> BTreeSet<u64> {
    v.iter().copied().collect()
}

fn ac1() -> Check {
    let start = Instant::now();
    let rows = (4..=8)
        .map(|n| ok(classify_exponents(n)))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    within(start, Duration::from_secs(60), "n = 4..8")?;
    ensure!(
        rows[0].not_fulfilled == set(&[3]),
        "n=4: {:?}",
        rows[0].not_fulfilled
    );
    ensure!(
        rows[1].fulfilled == set(&[15]),
        "n=5: {:?}",
        rows[1].fulfilled
    );
    ensure!(
        rows[2].not_fulfilled == set(&[15]),
        "n=6: {:?}",
        rows[2].not_fulfilled
    );
    ensure!(
        rows[3].fulfilled == set(&[3, 5, 9, 15, 27, 43, 63]),
        "n=7: {:?}",
        rows[3].fulfilled
    );
    ensure!(
        rows[4].not_fulfilled == set(&[27, 63, 111]),
        "n=8: {:?}",
        rows[4].not_fulfilled
    );
    for r in &rows {
        ensure!(
            !r.fulfilled.contains(&1) && !r.not_fulfilled.contains(&1),
            "class of 1 listed"
        );
    }
    let first = start.elapsed();

    let start = Instant::now();
    let t9 = ok(classify_exponents(9))?;
    ensure!(
        t9.not_fulfilled == set(&[15, 29, 39, 51, 53, 79, 85, 95, 123, 127, 191, 239]),
        "n=9: {:?}",
        t9.not_fulfilled
    );
    let t10 = ok(classify_exponents(10))?;
    ensure!(
        t10.not_fulfilled == set(&[111, 171, 255, 447]),
        "n=10: {:?}",
        t10.not_fulfilled
    );
    within(start, Duration::from_secs(1800), "n = 9, 10")?;
    Ok(format!(
        "n=4..8 in {first:.1?}, n=9,10 in {:.1?}",
        start.elapsed()
    ))
}

/// `|H_f(a, b)|^2 = 2^n` exactly for every nonzero `a` and all `b`.
fn exact_flat(f: &GroupFunction, p: &PairingSpec) -> std::result::Result<(), String> {
    let target = 1i64 << f.n();
    for a in 1..f.group().size() {
        let spec = ok(gen_walsh(f, a, p))?;
        for b in 0..spec.len() {
            let norm = spec.get(b).norm_sq();
            ensure!(
                norm.as_integer() == Some(target),
                "a={a} b={b}: |H|^2 = {:?}",
                norm.coeffs()
            );
        }
    }
    ensure!(ok(is_group_bent(f, p))?, "is_group_bent disagrees");
    Ok(())
}

fn main_pair(
    m: u32,
    k: u32,
) -> std::result::Result<(FieldSpec, GroupFunction, GroupFunction), String> {
    let field = ok(make_field(m, None))?;
    let pair = ok(ExponentPair::new(m, k))?;
    let basis = ok(field.subfield_basis(k))?;
    let f1 = ok(trace_family(&field, &pair, TraceVariant::F1, &basis))?;
    let f2 = ok(trace_family(&field, &pair, TraceVariant::F2, &basis))?;
    Ok((field, f1, f2))
}

fn ac2() -> Check {
    let start = Instant::now();
    let (field, f1, f2) = main_pair(6, 2)?;
    let pair = ok(ExponentPair::new(6, 2))?;
    ensure!(
        pair.e() == 58 && pair.d() == 25,
        "e = {}, d = {}",
        pair.e(),
        pair.d()
    );
    let p = PairingSpec::trace(&field);
    exact_flat(&f1, &p)?;
    exact_flat(&f2, &p)?;
    within(start, Duration::from_secs(10), "(6,2)")?;
    Ok(format!("{:.1?}", start.elapsed()))
}

fn ac3() -> Check {
    let start = Instant::now();
    let (field, f1, f2) = main_pair(9, 3)?;
    let p = PairingSpec::trace(&field);
    exact_flat(&f1, &p)?;
    exact_flat(&f2, &p)?;
    within(start, Duration::from_secs(600), "(9,3)")?;
    Ok(format!("{:.1?}", start.elapsed()))
}

fn ac4() -> Check {
    let (field, f1, f2) = main_pair(6, 2)?;
    let spread = desarguesian(&field).punctured_cells();
    for (name, f, want) in [("f1", &f1, 4), ("f2", &f2, 5)] {
        for (i, c) in ok(f.components())?.iter().enumerate() {
            let deg = anf_degree(c).degree;
            ensure!(deg == want, "{name} component {i} has degree {deg}");
        }
        ensure!(
            !ok(constant_on_cells(f, 12, &spread))?,
            "{name} is constant on the spread"
        );
    }
    ensure!(25u32.count_ones() + 1 == 4, "wt(25)");
    Ok("degrees 4 / 5, not spread-constant".into())
}

fn ac5() -> Check {
    let field = ok(make_field(6, None))?;
    let p = PairingSpec::trace(&field);
    let sub = ok(field.subfield_elements(2))?;
    let refined = [
        ok(GammaCells::new(&field, 2, Side::A))?.refined_partition(),
        ok(GammaCells::new(&field, 2, Side::B))?.refined_partition(),
    ];
    let mut count = 0;
    for side in [Side::A, Side::B] {
        let other = if side == Side::A {
            &refined[1]
        } else {
            &refined[0]
        };
        for i in 0..4 {
            for j in i + 1..4 {
                for hyper in [false, true] {
                    let t = ok(psap(&field, 2, &[sub[i], sub[j]], hyper, side))?;
                    let weight = if hyper { 2080 } else { 2016 };
                    ensure!(
                        t.weight() == weight,
                        "{side:?} {i}{j} {hyper}: weight {}",
                        t.weight()
                    );
                    let dual = ok(bent_dual(&t, &p))?
                        .ok_or(format!("{side:?} {i}{j} {hyper}: not bent"))?;
                    ensure!(
                        ok(constant_on(&dual, other))?,
                        "{side:?} {i}{j} {hyper}: dual not constant on the other family"
                    );
                    // the dual is again supported on two trace cells, maybe with the hyperplane
                    let hit: usize = other.cells()[1..].iter().filter(|c| dual.get(c[0])).count();
                    ensure!(
                        hit == 2,
                        "{side:?} {i}{j} {hyper}: dual meets {hit} trace cells"
                    );
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} functions"))
}

fn random_pi(
    field: &FieldSpec,
    rng: &mut ChaCha8Rng,
) -> std::result::Result<Vec<FieldElement>, String> {
    let mut pi = ok(field.subfield_elements(2))?;
    pi.shuffle(rng);
    Ok(pi)
}

fn ac6() -> Check {
    let field = ok(make_field(6, None))?;
    let p = PairingSpec::trace(&field);
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let groups = [GroupSpec::cyclic(2), GroupSpec::elementary(2)];
    let mut count = 0;
    for _ in 0..5 {
        let pi = random_pi(&field, &mut rng)?;
        for side in [Side::A, Side::B] {
            for g in &groups {
                for u in 0..4 {
                    let f = ok(partition_bent(&field, 2, side, &pi, g, u))?;
                    ensure!(ok(is_group_bent(&f, &p))?, "{side:?} {g:?} u={u} pi={pi:?}");
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} functions"))
}

fn ac7() -> Check {
    let field = ok(make_field(6, None))?;
    let sums = ok(CharacterSums::new(&field, 2))?;
    let gammas = ok(field.subfield_elements(2))?;
    let mut cases = 0;
    for kind in [SumKind::Omega, SumKind::Upsilon] {
        for u in field.elements() {
            for v in field.elements() {
                if (kind == SumKind::Omega && v.is_zero())
                    || (kind == SumKind::Upsilon && u.is_zero())
                {
                    continue;
                }
                for &g in &gammas {
                    let brute = ok(sums.brute(kind, u, v, g))?;
                    let closed = ok(sums.closed(kind, u, v, g))?;
                    ensure!(
                        brute == closed,
                        "{kind:?} u={u} v={v} gamma={g}: {brute} vs {closed}"
                    );
                    cases += 1;
                }
            }
        }
    }
    Ok(format!("{cases} cases"))
}

fn ac8() -> Check {
    let field = ok(make_field(4, None))?;
    let spread = desarguesian(&field);
    let p = PairingSpec::dot(8);
    let groups = [
        GroupSpec::cyclic(1),
        GroupSpec::cyclic(2),
        GroupSpec::elementary(2),
        GroupSpec::cyclic(4),
    ];
    for g in &groups {
        for variant in [SpreadVariant::I, SpreadVariant::II] {
            let asg = ok(Assignment::sequential(g, variant, 4, 1))?;
            let f = ok(spread_construction(spread.cells(), 8, g, variant, &asg))?;
            ensure!(ok(is_group_bent(&f, &p))?, "{g:?} {variant:?} not bent");
            if g.size() == 2 {
                let w = f.bit_tables()[0].weight();
                let want = if variant == SpreadVariant::I {
                    120
                } else {
                    136
                };
                ensure!(w == want, "{variant:?} weight {w}");
            }
        }
    }
    Ok("8 functions".into())
}

/// `2^(k-1) Tr(x pi(y)) + g(y)` on `F_2^h x F_2^h`, dot pairing.
fn generalized_mm(h: u32, k: u32, rng: &mut ChaCha8Rng) -> GroupFunction {
    let mut perm: Vec<usize> = (0..1 << h).collect();
    perm.shuffle(rng);
    let g: Vec<u32> = (0..1 << h).map(|_| rng.gen_range(0..1 << k)).collect();
    let top = 1u32 << (k - 1);
    GroupFunction::from_fn(2 * h, GroupSpec::cyclic(k), |i| {
        let (x, y) = (i >> h, i & ((1 << h) - 1));
        let bit = (x & perm[y]).count_ones() & 1;
        (bit * top + g[y]) % (1 << k)
    })
    .expect("valid values")
}

fn ac9() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut corpus: Vec<(GroupFunction, PairingSpec)> = Vec::new();
    for h in 1..=6u32 {
        for k in 1..=3u32 {
            for _ in 0..4 {
                let f = generalized_mm(h, k, &mut rng);
                let n = f.n();
                let mut g = f.values().to_vec();
                let x = rng.gen_range(0..g.len());
                g[x] = (g[x] + 1) % (1 << k);
                corpus.push((f, PairingSpec::dot(n)));
                corpus.push((
                    ok(GroupFunction::new(n, GroupSpec::cyclic(k), g))?,
                    PairingSpec::dot(n),
                ));
                let r = ok(GroupFunction::from_fn(n, GroupSpec::cyclic(k), |_| {
                    rng.gen_range(0..1 << k)
                }))?;
                corpus.push((r, PairingSpec::dot(n)));
            }
        }
    }
    let (field, f1, f2) = main_pair(6, 2)?;
    let tp = PairingSpec::trace(&field);
    for f in [&f1, &f2] {
        corpus.push((f.clone(), tp.clone()));
        corpus.push((f.scale(3), tp.clone()));
    }
    let pi = ok(default_pi(&field, 2))?;
    for side in [Side::A, Side::B] {
        corpus.push((
            ok(partition_bent(
                &field,
                2,
                side,
                &pi,
                &GroupSpec::cyclic(2),
                1,
            ))?,
            tp.clone(),
        ));
    }
    let f4 = ok(make_field(4, None))?;
    for k in 1..=3 {
        let g = GroupSpec::cyclic(k);
        let asg = ok(Assignment::sequential(&g, SpreadVariant::II, 4, 1))?;
        corpus.push((
            ok(spread_construction(
                desarguesian(&f4).cells(),
                8,
                &g,
                SpreadVariant::II,
                &asg,
            ))?,
            PairingSpec::dot(8),
        ));
    }

    let (mut pos, mut neg) = (0, 0);
    for (i, (f, p)) in corpus.iter().enumerate() {
        let direct = ok(is_generalized_bent(f, p))?;
        let via = ok(affine_space_check_at(f, p, 0))?.verdict;
        ensure!(
            direct == via,
            "function {i}: transform {direct}, affine space {via}"
        );
        if f.group().k_total() <= f.n() / 2 {
            let all_direct = ok(is_group_bent(f, p))?;
            ensure!(
                all_direct == ok(affine_space_check(f, p))?.verdict,
                "function {i}: all levels differ"
            );
        }
        if direct {
            pos += 1
        } else {
            neg += 1
        }
    }
    ensure!(
        pos >= 50 && neg >= 50,
        "corpus has {pos} positives and {neg} negatives"
    );
    Ok(format!("{pos} positives, {neg} negatives"))
}

fn ac10() -> Check {
    let field = ok(make_field(6, None))?;
    let pair = ok(ExponentPair::new(6, 2))?;
    let p = PairingSpec::trace(&field);
    let nonzero: Vec<FieldElement> = ok(field.subfield_elements(2))?
        .into_iter()
        .skip(1)
        .collect();
    let mut failures = Vec::new();
    let mut count = 0;
    for &a in &nonzero {
        for &b in &nonzero {
            for &c in &nonzero {
                count += 1;
                let g = ok(carlet(&field, &pair, [a, b, c], CarletKind::G))?;
                let gs = ok(carlet(&field, &pair, [a, b, c], CarletKind::GStar))?;
                ensure!(anf_degree(&g).degree <= 6, "degree above m");
                match ok(bent_dual(&g, &p))? {
                    None => failures.push(format!("g({a},{b},{c}) not bent")),
                    Some(dual) if dual != gs => {
                        failures.push(format!("dual of g({a},{b},{c}) differs from g*"))
                    }
                    Some(_) => {}
                }
            }
        }
    }
    ensure!(
        failures.is_empty(),
        "{} of {count} triples: {}",
        failures.len(),
        failures.join("; ")
    );
    Ok(format!("{count} triples"))
}

fn naive_walsh(f: &TruthTable, p: &PairingSpec) -> Vec<i64> {
    (0..f.len())
        .map(|b| {
            (0..f.len())
                .map(|x| {
                    if f.get(x) as u8 ^ p.eval(b, x) == 1 {
                        -1
                    } else {
                        1
                    }
                })
                .sum()
        })
        .collect()
}

fn ac11() -> Check {
    // fast against naive transforms
    let dot4 = PairingSpec::dot(4);
    let tr2 = PairingSpec::trace(&ok(make_field(2, None))?);
    for bits in 0u32..1 << 16 {
        let f = TruthTable::from_fn(4, |i| bits >> i & 1 == 1);
        for p in [&dot4, &tr2] {
            ensure!(
                ok(walsh_spectrum(&f, p))?.values() == naive_walsh(&f, p),
                "n=4 table {bits:#x}"
            );
        }
    }
    for n in 1..=3 {
        let p = PairingSpec::dot(n);
        for bits in 0u32..1 << (1 << n) {
            let f = TruthTable::from_fn(n, |i| bits >> i & 1 == 1);
            ensure!(
                ok(walsh_spectrum(&f, &p))?.values() == naive_walsh(&f, &p),
                "n={n}"
            );
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in [6u32, 8, 10, 12] {
        let field = ok(make_field(n / 2, None))?;
        for p in [PairingSpec::dot(n), PairingSpec::trace(&field)] {
            for _ in 0..3 {
                let f = TruthTable::from_fn(n, |_| rng.gen());
                let s = ok(walsh_spectrum(&f, &p))?;
                ensure!(s.values() == naive_walsh(&f, &p), "random n={n}");
                ensure!(s.parseval_sum() == 1i128 << (2 * n), "Parseval n={n}");
            }
        }
    }
    let mut data: Vec<i64> = (0..1 << 12).map(|_| rng.gen_range(-9..9)).collect();
    let orig = data.clone();
    fwht(&mut data);
    fwht(&mut data);
    ensure!(
        data.iter().zip(&orig).all(|(a, b)| *a == b << 12),
        "FWHT is not an involution up to 2^n"
    );

    // the constructed corpus
    let (field, f1, f2) = main_pair(6, 2)?;
    let tp = PairingSpec::trace(&field);
    let pair = ok(ExponentPair::new(6, 2))?;
    let sub = ok(field.subfield_elements(2))?;
    let mut booleans: Vec<(TruthTable, PairingSpec)> = Vec::new();
    let mut groups: Vec<(GroupFunction, PairingSpec)> =
        vec![(f1.clone(), tp.clone()), (f2.clone(), tp.clone())];
    for f in [&f1, &f2] {
        for c in ok(f.components())? {
            booleans.push((c, tp.clone()));
        }
    }
    for side in [Side::A, Side::B] {
        for hyper in [false, true] {
            booleans.push((ok(psap(&field, 2, &sub[1..3], hyper, side))?, tp.clone()));
        }
        let pi = ok(default_pi(&field, 2))?;
        groups.push((
            ok(partition_bent(
                &field,
                2,
                side,
                &pi,
                &GroupSpec::cyclic(2),
                2,
            ))?,
            tp.clone(),
        ));
    }
    for kind in [CarletKind::G, CarletKind::GStar] {
        booleans.push((
            ok(carlet(&field, &pair, [sub[1], sub[2], sub[2]], kind))?,
            tp.clone(),
        ));
    }
    booleans.push((ok(mm(&field, sub[3], 25))?, tp.clone()));
    let f4 = ok(make_field(4, None))?;
    for k in 1..=4 {
        for variant in [SpreadVariant::I, SpreadVariant::II] {
            let g = GroupSpec::cyclic(k);
            let asg = ok(Assignment::sequential(&g, variant, 4, 1))?;
            let f = ok(spread_construction(
                desarguesian(&f4).cells(),
                8,
                &g,
                variant,
                &asg,
            ))?;
            if k == 1 {
                booleans.push((f.bit_tables().remove(0), PairingSpec::dot(8)));
            }
            groups.push((f, PairingSpec::dot(8)));
        }
    }
    for (i, (b, p)) in booleans.iter().enumerate() {
        let dual = ok(bent_dual(b, p))?.ok_or(format!("boolean {i} is not bent"))?;
        ensure!(
            ok(bent_dual(&dual, p))?.as_ref() == Some(b),
            "boolean {i}: dual of dual differs"
        );
        ensure!(
            ok(walsh_spectrum(b, p))?.parseval_sum() == 1i128 << (2 * b.n()),
            "boolean {i}: Parseval"
        );
    }
    for (i, (f, p)) in groups.iter().enumerate() {
        let k = f.group().k_total();
        let scaled = (0..k)
            .map(|t| is_generalized_bent(&f.scale(1 << t), p))
            .collect::<std::result::Result<Vec<_>, _>>();
        let levels = ok(scaled)?.into_iter().all(|b| b);
        ensure!(
            levels == ok(is_group_bent(f, p))?,
            "group function {i}: level criterion disagrees"
        );
        ensure!(levels, "group function {i} is not bent");
        let spec = ok(gen_walsh(f, 1, p))?;
        ensure!(
            spec.parseval_sum().as_integer() == Some(1i64 << (2 * f.n())),
            "group function {i}: Parseval"
        );
    }

    let g1 = ok(gamma_partition(&field, 2, Side::A))?;
    let g2 = ok(gamma_partition(&field, 2, Side::B))?;
    ensure!(
        preimage_partition(&f2).same_cells(&g1),
        "preimages of f2 differ from Gamma1"
    );
    ensure!(
        preimage_partition(&f1).same_cells(&g2),
        "preimages of f1 differ from Gamma2"
    );
    Ok(format!(
        "{} Boolean and {} group functions",
        booleans.len(),
        groups.len()
    ))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("AC1", ac1),
        ("AC2", ac2),
        ("AC3", ac3),
        ("AC4", ac4),
        ("AC5", ac5),
        ("AC6", ac6),
        ("AC7", ac7),
        ("AC8", ac8),
        ("AC9", ac9),
        ("AC10", ac10),
        ("AC11", ac11),
    ];
    let only: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| a.starts_with("AC"))
        .collect();
    let mut failed = 0;
    for (name, check) in criteria {
        if !only.is_empty() && !only.iter().any(|o| o == name) {
            continue;
        }
        let start = Instant::now();
        match check() {
            Ok(detail) => println!("{name} PASS ({detail}; {:.1?})", start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("{name} FAIL: {why}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
