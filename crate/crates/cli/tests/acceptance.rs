//! Acceptance suite: one test per criterion, each printing a single
//! `PASS`/`FAIL` line with its measurement and limit. Run with
//! `cargo test -p hmap-cli --test acceptance -- --nocapture` to see them.
//!
//! Expected values come either from the fixtures' published observations or
//! from the brute-force oracle shared with the core tests, which reads only
//! the raw constructor trace.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::collections::BTreeSet;
use std::fs;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{linkable_pairs, oracle, random_hypermap};
use hypermap::characteristics::{check_euler_formula, check_genus_theorem, counts, counts_by_recurrence};
use hypermap::criteria::{disconnect_criterion_b0, planarity_crit_b0, planarity_crit_link0};
use hypermap::fixtures::{digon, digon_ring, fix1, k4t, m2, m2_ring};
use hypermap::format::{parse_map, serialize_map, serialize_ring};
use hypermap::jordan::{exhaustive_jordan, fuzz_jordan, gen_planar, jordan_check, small_maps, FuzzConfig, Verdict};
use hypermap::orbits::{orbit, same_component, same_face};
use hypermap::rings::{adjacent_faces, break_along, face_rep, pre_ring0, pre_ring1, pre_ring2, pre_ring3, ring_check};
use hypermap::{Dart, Dim, FreeMap, HypermapIndex, HypermapView, MapStats, OrbitKind, RingItem};

/// Fixed seed of the fuzz run.
const FUZZ_SEED: u64 = 7;

/// Prints the verdict line of a criterion and fails the test if it did not
/// pass or ran over its time limit.
fn report(id: u32, name: &str, mismatches: &[String], detail: &str, elapsed: Duration, limit: Option<Duration>) {
    let in_time = limit.is_none_or(|l| elapsed < l);
    let ok = mismatches.is_empty() && in_time;
    let limit_text = limit.map_or_else(|| "none".to_owned(), |l| format!("{:.0?}", l));
    println!(
        "{} criterion {id} ({name}): {detail}; mismatches={}; elapsed={:.2?} limit={limit_text}",
        if ok { "PASS" } else { "FAIL" },
        mismatches.len(),
        elapsed
    );
    for m in mismatches.iter().take(5) {
        println!("    {m}");
    }
    assert!(
        mismatches.is_empty(),
        "criterion {id}: {} mismatches, first: {}",
        mismatches.len(),
        mismatches[0]
    );
    assert!(in_time, "criterion {id}: {elapsed:?} over the limit {limit_text}");
}

/// Records `what` as a mismatch when `got != want`.
fn expect<T: PartialEq + std::fmt::Debug>(bad: &mut Vec<String>, what: &str, got: T, want: T) {
    if got != want {
        bad.push(format!("{what}: got {got:?}, want {want:?}"));
    }
}

fn stats_tuple(s: &MapStats) -> (u64, u64, u64, u64, u64, i64, i64, bool) {
    (s.nd, s.ne, s.nv, s.nf, s.nc, s.ec, s.genus, s.planar)
}

fn d(v: u32) -> Dart {
    Dart(v)
}

fn set(idx: &HypermapIndex, kind: OrbitKind, z: u32) -> BTreeSet<u32> {
    orbit(idx, kind, d(z)).unwrap().members.iter().map(|x| x.0).collect()
}

#[test]
fn criterion_1_fixture_exact() {
    let start = Instant::now();
    let m = fix1();
    let idx = HypermapIndex::build(&m).unwrap();
    let mut bad = Vec::new();
    let want = (15, 7, 6, 6, 3, 4, 1, false);
    expect(&mut bad, "stats", stats_tuple(&counts(&m).unwrap()), want);
    expect(&mut bad, "index stats", stats_tuple(idx.stats()), want);
    expect(&mut bad, "edge of 3", set(&idx, OrbitKind::Edge, 3), [3, 5, 4].into());
    expect(
        &mut bad,
        "vertex of 3",
        set(&idx, OrbitKind::Vertex, 3),
        [3, 4, 1, 2].into(),
    );
    expect(&mut bad, "face of 8", set(&idx, OrbitKind::Face, 8), [8, 10].into());
    expect(&mut bad, "face of 13", set(&idx, OrbitKind::Face, 13), [13].into());
    expect(
        &mut bad,
        "face of 1",
        set(&idx, OrbitKind::Face, 1),
        [1, 5, 2, 11, 12, 7, 6, 4, 9].into(),
    );
    let views: [(&str, &dyn HypermapView); 2] = [("term", &m), ("index", &idx)];
    for (name, v) in views {
        expect(
            &mut bad,
            &format!("{name} A zero 4"),
            v.link_next(Dim::Zero, d(4)),
            d(3),
        );
        expect(
            &mut bad,
            &format!("{name} A zero 5"),
            v.link_next(Dim::Zero, d(5)),
            Dart::NIL,
        );
        expect(
            &mut bad,
            &format!("{name} A_1 one 2"),
            v.link_prev(Dim::One, d(2)),
            d(1),
        );
        expect(&mut bad, &format!("{name} top one 1"), v.top(Dim::One, d(1)), d(3));
        expect(
            &mut bad,
            &format!("{name} bottom one 1"),
            v.bottom(Dim::One, d(1)),
            d(4),
        );
        expect(
            &mut bad,
            &format!("{name} cA one 3"),
            v.closed_next(Dim::One, d(3)),
            d(4),
        );
        expect(
            &mut bad,
            &format!("{name} cA_1 one 4"),
            v.closed_prev(Dim::One, d(4)),
            d(3),
        );
        expect(&mut bad, &format!("{name} F 1"), v.face_step(d(1)), Dart::NIL);
        expect(&mut bad, &format!("{name} cF 1"), v.face_next(d(1)), d(5));
    }
    expect(&mut bad, "expf 1 5", same_face(&idx, d(1), d(5)), true);
    expect(&mut bad, "expf 5 3", same_face(&idx, d(5), d(3)), false);
    expect(&mut bad, "eqc 1 5", same_component(&idx, d(1), d(5)), true);
    expect(&mut bad, "eqc 1 13", same_component(&idx, d(1), d(13)), false);
    report(
        1,
        "15-dart fixture",
        &bad,
        "stats, orbits and pointwise observers",
        start.elapsed(),
        Some(Duration::from_secs(1)),
    );
}

#[test]
fn criterion_2_genus_theorem() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x6e75_7321);
    let mut bad = Vec::new();
    let mut genera = BTreeSet::new();
    for i in 0..10_000 {
        let m = random_hypermap(&mut rng, 64);
        match check_genus_theorem(&m) {
            Ok(r) if r.passed() => {
                let o = oracle::stats(&m);
                if (o.ec, o.genus, o.nc) != (r.stats.ec, r.stats.genus, r.stats.nc) {
                    bad.push(format!("map {i}: oracle {o:?} vs {}", r.stats));
                }
                if o.ec % 2 != 0 || o.genus < 0 || 2 * (o.nc as i64) < o.ec {
                    bad.push(format!("map {i}: oracle violates the theorem: {o:?}"));
                }
                genera.insert(r.stats.genus);
            }
            Ok(r) => bad.push(format!("map {i}: {r:?}")),
            Err(e) => bad.push(format!("map {i}: {e}")),
        }
    }
    report(
        2,
        "genus theorem",
        &bad,
        &format!("10000 random hypermaps up to 64 darts, genera seen {genera:?}"),
        start.elapsed(),
        Some(Duration::from_secs(60)),
    );
}

#[test]
fn criterion_3_euler_formula() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x6575_6c65);
    let mut bad = Vec::new();
    let mut connected = 0;
    for i in 0..5_000 {
        let n = rng.gen_range(0..=64);
        let links = rng.gen_range(0..=2 * n);
        let seed = rng.gen();
        let m = gen_planar(seed, n, links).unwrap();
        let o = oracle::stats(&m);
        if o.ec != 2 * o.nc as i64 {
            bad.push(format!("map {i} (seed {seed}): oracle ec={} nc={}", o.ec, o.nc));
        }
        match check_euler_formula(&m) {
            Ok(r) if r.passed() => {}
            Ok(r) => bad.push(format!("map {i} (seed {seed}): {r:?}")),
            Err(e) => bad.push(format!("map {i} (seed {seed}): {e}")),
        }
        if o.nc == 1 {
            connected += 1;
            let chi = o.nv as i64 + o.ne as i64 + o.nf as i64 - o.nd as i64;
            if chi != 2 {
                bad.push(format!("map {i} (seed {seed}): connected with v+e+f-d={chi}"));
            }
        }
    }
    report(
        3,
        "Euler formula",
        &bad,
        &format!("5000 generated planar maps, {connected} connected"),
        start.elapsed(),
        Some(Duration::from_secs(60)),
    );
}

#[test]
fn criterion_4_criteria_exhaustive() {
    let start = Instant::now();
    let mut bad = Vec::new();
    let (mut maps, mut link_cases, mut break_cases) = (0u64, 0u64, 0u64);
    for m in small_maps(5) {
        maps += 1;
        let idx = HypermapIndex::build(&m).unwrap();
        for (x, y) in linkable_pairs(&idx, Dim::Zero) {
            link_cases += 1;
            let want = oracle::genus(&m.clone().raw_link(Dim::Zero, x, y)) == 0;
            match planarity_crit_link0(&m, x, y) {
                Ok(got) if got == want => {}
                other => bad.push(format!("link0 {m} {x} {y}: {other:?}, oracle {want}")),
            }
        }
        let planar = oracle::genus(&m) == 0;
        for &x in idx.darts() {
            let y = m.link_next(Dim::Zero, x);
            if y.is_nil() {
                continue;
            }
            break_cases += 1;
            match planarity_crit_b0(&m, x) {
                Ok(got) if got == planar => {}
                other => bad.push(format!("b0 {m} {x}: {other:?}, oracle {planar}")),
            }
            if planar {
                let want = !oracle::same_component(&m.unlink(Dim::Zero, x), x.0, y.0);
                match disconnect_criterion_b0(&m, x) {
                    Ok(got) if got == want => {}
                    other => bad.push(format!("disconnect {m} {x}: {other:?}, oracle {want}")),
                }
            }
        }
    }
    report(
        4,
        "criterion equivalence, exhaustive",
        &bad,
        &format!("{maps} maps up to 5 darts, {link_cases} link cases, {break_cases} break cases"),
        start.elapsed(),
        Some(Duration::from_secs(600)),
    );
}

#[test]
fn criterion_5_jordan_exhaustive() {
    let start = Instant::now();
    let r = exhaustive_jordan(5, 3);
    let mut bad: Vec<String> = r
        .failures
        .iter()
        .map(|w| format!("{}: {} / {}", w.reason, w.map, serialize_ring(&w.ring).trim_end()))
        .collect();
    if r.rings == 0 {
        bad.push("no rings enumerated".into());
    }
    report(
        5,
        "Jordan check, exhaustive",
        &bad,
        &format!(
            "{} maps, {} planar, {} rings by length {:?}",
            r.maps, r.planar_maps, r.rings, r.rings_by_len
        ),
        start.elapsed(),
        None,
    );
}

#[test]
fn criterion_5_oracle_cross_check() {
    // The swap-based break of the oracle must agree with the library on every
    // ring of every planar map up to four darts. Rings are enumerated here by
    // brute force over all item sequences, without pruning.
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut rings = 0u64;
    for m in small_maps(4) {
        if oracle::genus(&m) != 0 {
            continue;
        }
        let idx = HypermapIndex::build(&m).unwrap();
        let nc = oracle::stats(&m).nc;
        let items: Vec<(u32, bool)> = idx
            .darts()
            .iter()
            .filter(|&&x| idx.succ(Dim::Zero, x))
            .flat_map(|x| [(x.0, false), (x.0, true)])
            .collect();
        let mut seqs: Vec<Vec<(u32, bool)>> = items.iter().map(|&i| vec![i]).collect();
        let mut frontier = seqs.clone();
        for _ in 1..3 {
            frontier = frontier
                .iter()
                .flat_map(|s| items.iter().map(move |&i| [s.as_slice(), &[i]].concat()))
                .collect();
            seqs.extend(frontier.iter().cloned());
        }
        for s in seqs {
            let l = s.iter().map(|&(x, b)| RingItem::new(x, b)).collect();
            if !ring_check(&idx, &l).is_ring() {
                continue;
            }
            rings += 1;
            let (_, nc_swap) = oracle::swap_break(&m, &s);
            let nc_lib = counts(&break_along(&m, &l).unwrap()).unwrap().nc;
            if nc_swap != nc + 1 || nc_lib != nc + 1 {
                bad.push(format!("{m} ring {s:?}: nc={nc} swap={nc_swap} library={nc_lib}"));
            }
        }
    }
    report(
        5,
        "Jordan check, oracle cross-check",
        &bad,
        &format!("{rings} rings on planar maps up to 4 darts"),
        start.elapsed(),
        None,
    );
}

#[test]
fn criterion_6_jordan_fuzz() {
    let start = Instant::now();
    let r = fuzz_jordan(&FuzzConfig::new(1000, FUZZ_SEED, 32));
    let mut bad: Vec<String> = r
        .witnesses
        .iter()
        .map(|w| format!("trial {}: {}", w.trial, w.reason))
        .collect();
    if r.rings_found < 200 {
        bad.push(format!("only {} rings found", r.rings_found));
    }
    for (what, n) in [
        ("jordan", r.jordan_failures),
        ("first break", r.connect_failures),
        ("tail", r.tail_failures),
        ("errors", r.errors),
    ] {
        if n != 0 {
            bad.push(format!("{what} failures: {n}"));
        }
    }
    report(
        6,
        "Jordan fuzz",
        &bad,
        &r.summary(),
        start.elapsed(),
        Some(Duration::from_secs(300)),
    );
}

#[test]
fn criterion_7_backend_equivalence() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x6261_636b);
    let mut bad = Vec::new();
    let mut observations = 0u64;
    for i in 0..1_000 {
        let m = random_hypermap(&mut rng, 48);
        let idx = HypermapIndex::build(&m).unwrap();
        let mut probe = idx.darts().to_vec();
        probe.push(Dart(10_000));
        for &z in &probe {
            let mut cmp = |what: String, a: String, b: String| {
                observations += 1;
                if a != b {
                    bad.push(format!("map {i} dart {z}: {what} term={a} index={b}"));
                }
            };
            cmp("exd".into(), m.has_dart(z).to_string(), idx.has_dart(z).to_string());
            cmp("F".into(), m.face_step(z).to_string(), idx.face_step(z).to_string());
            cmp("cF".into(), m.face_next(z).to_string(), idx.face_next(z).to_string());
            cmp("cF_1".into(), m.face_prev(z).to_string(), idx.face_prev(z).to_string());
            for k in Dim::ALL {
                cmp(
                    format!("A {k}"),
                    m.link_next(k, z).to_string(),
                    idx.link_next(k, z).to_string(),
                );
                cmp(
                    format!("A_1 {k}"),
                    m.link_prev(k, z).to_string(),
                    idx.link_prev(k, z).to_string(),
                );
                cmp(
                    format!("succ {k}"),
                    m.succ(k, z).to_string(),
                    idx.succ(k, z).to_string(),
                );
                cmp(
                    format!("pred {k}"),
                    m.pred(k, z).to_string(),
                    idx.pred(k, z).to_string(),
                );
                cmp(format!("top {k}"), m.top(k, z).to_string(), idx.top(k, z).to_string());
                cmp(
                    format!("bottom {k}"),
                    m.bottom(k, z).to_string(),
                    idx.bottom(k, z).to_string(),
                );
                cmp(
                    format!("cA {k}"),
                    m.closed_next(k, z).to_string(),
                    idx.closed_next(k, z).to_string(),
                );
                cmp(
                    format!("cA_1 {k}"),
                    m.closed_prev(k, z).to_string(),
                    idx.closed_prev(k, z).to_string(),
                );
            }
        }
        let by_enumeration = counts(&m).unwrap();
        let by_recurrence = counts_by_recurrence(&m).unwrap();
        if by_enumeration != by_recurrence {
            bad.push(format!(
                "map {i}: enumeration {by_enumeration} recurrence {by_recurrence}"
            ));
        }
        let o = oracle::stats(&m);
        if (o.nd, o.ne, o.nv, o.nf, o.nc)
            != (
                by_enumeration.nd,
                by_enumeration.ne,
                by_enumeration.nv,
                by_enumeration.nf,
                by_enumeration.nc,
            )
        {
            bad.push(format!("map {i}: oracle {o:?} vs {by_enumeration}"));
        }
    }
    report(
        7,
        "backend equivalence",
        &bad,
        &format!("1000 random hypermaps, {observations} observations"),
        start.elapsed(),
        None,
    );
}

#[test]
fn criterion_8_micro_goldens() {
    let start = Instant::now();
    let mut bad = Vec::new();
    let goldens = [
        ("M2", m2(), (2, 1, 2, 1, 1, 2, 0, true)),
        ("DIGON", digon(), (4, 2, 2, 2, 1, 2, 0, true)),
        ("K4T", k4t(), (4, 2, 1, 1, 1, 0, 1, false)),
    ];
    for (name, m, want) in goldens {
        let o = oracle::stats(&m);
        expect(
            &mut bad,
            &format!("{name} oracle"),
            (o.nd, o.ne, o.nv, o.nf, o.nc, o.ec, o.genus, o.genus == 0),
            want,
        );
        expect(
            &mut bad,
            &format!("{name} stats"),
            stats_tuple(&counts(&m).unwrap()),
            want,
        );
    }

    let m = digon();
    let idx = HypermapIndex::build(&m).unwrap();
    let l = digon_ring();
    let (a, b) = (RingItem::new(1, true), RingItem::new(3, false));
    expect(&mut bad, "face_rep (1,t)", face_rep(&idx, a).unwrap(), d(2));
    expect(&mut bad, "face_rep (3,f)", face_rep(&idx, b).unwrap(), d(3));
    expect(&mut bad, "oracle A zero 1", oracle::perms(&m).alpha[0][&1], 2);
    expect(
        &mut bad,
        "adjacent (1,t) (3,f)",
        adjacent_faces(&idx, a, b).unwrap(),
        true,
    );
    expect(&mut bad, "oracle expf 1 3", oracle::same_face(&m, 1, 3), true);
    expect(
        &mut bad,
        "adjacent (3,f) (1,t)",
        adjacent_faces(&idx, b, a).unwrap(),
        true,
    );
    expect(&mut bad, "oracle expf 4 2", oracle::same_face(&m, 4, 2), true);
    let c = RingItem::new(3, true);
    expect(
        &mut bad,
        "adjacent (1,t) (3,t)",
        adjacent_faces(&idx, a, c).unwrap(),
        false,
    );
    expect(&mut bad, "oracle expf 1 4", oracle::same_face(&m, 1, 4), false);
    let conds = [
        pre_ring0(&idx, &l),
        pre_ring1(&idx, &l),
        pre_ring2(&idx, &l),
        pre_ring3(&idx, &l),
    ];
    expect(&mut bad, "pre_ring0..3", conds, [true; 4]);
    expect(&mut bad, "ring_check", ring_check(&idx, &l).is_ring(), true);
    let broken = break_along(&m, &l).unwrap();
    expect(
        &mut bad,
        "Bl links",
        broken.links().collect::<Vec<_>>(),
        vec![(Dim::One, d(2), d(3)), (Dim::One, d(4), d(1))],
    );
    let comps: BTreeSet<BTreeSet<u32>> = oracle::components(&oracle::perms(&broken)).into_iter().collect();
    expect(
        &mut bad,
        "oracle components after break",
        comps,
        [[1, 4].into(), [2, 3].into()].into(),
    );
    let out = jordan_check(&m, &l).unwrap();
    expect(
        &mut bad,
        "jordan DIGON",
        (out.nc_before, out.nc_after, out.delta, out.verdict),
        (1, 2, 1, Verdict::Pass),
    );
    let out = jordan_check(&m2(), &m2_ring()).unwrap();
    expect(
        &mut bad,
        "jordan M2",
        (out.nc_before, out.nc_after, out.delta, out.verdict),
        (1, 2, 1, Verdict::Pass),
    );
    expect(
        &mut bad,
        "oracle swap break M2",
        oracle::swap_break(&m2(), &[(1, true)]).1,
        2,
    );
    report(
        8,
        "micro goldens",
        &bad,
        "M2, DIGON, K4T and the DIGON ring",
        start.elapsed(),
        None,
    );
}

#[test]
fn criterion_9_cli_round_trip_and_exit_codes() {
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x7472_6970);
    for i in 0..1_000 {
        let m: FreeMap = if i % 2 == 0 {
            let n = rng.gen_range(0..=40);
            gen_planar(rng.gen(), n, rng.gen_range(0..=2 * n)).unwrap()
        } else {
            random_hypermap(&mut rng, 40)
        };
        let text = serialize_map(&m);
        match parse_map(&text) {
            Ok(back) if back == m && serialize_map(&back) == text => {}
            other => bad.push(format!("map {i}: round trip gave {other:?}")),
        }
    }

    let dir = std::env::temp_dir().join(format!("hmap-acceptance-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let fix1_path = dir.join("fix1.hmap");
    let m2_path = dir.join("m2.hmap");
    let ring_path = dir.join("ring1.ring");
    fs::write(&fix1_path, serialize_map(&fix1())).unwrap();
    fs::write(&m2_path, serialize_map(&m2())).unwrap();
    fs::write(&ring_path, serialize_ring(&m2_ring())).unwrap();
    let hmap = env!("CARGO_BIN_EXE_hmap");

    let planar = Command::new(hmap).arg("planar").arg(&fix1_path).output().unwrap();
    expect(&mut bad, "planar FIX1 exit", planar.status.code(), Some(1));

    let jordan = Command::new(hmap)
        .arg("jordan")
        .arg(&m2_path)
        .arg(&ring_path)
        .output()
        .unwrap();
    expect(&mut bad, "jordan M2 exit", jordan.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&jordan.stdout).into_owned();
    expect(
        &mut bad,
        "jordan M2 output",
        stdout.as_str(),
        "nc_before=1 nc_after=2 verdict=pass\n",
    );
    fs::remove_dir_all(&dir).unwrap();

    report(
        9,
        "CLI round trip and exit codes",
        &bad,
        "1000 round trips; planar on FIX1; jordan on M2 with a singleton ring",
        start.elapsed(),
        None,
    );
}
