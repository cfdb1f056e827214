//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Runs under `cargo test` with the default harness off.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use cospectra::{
    appendix_catalog, build_report, check_cube_identity, construct_even, construct_odd,
    cycle_product, hypercube, idempotent_strong_cospectrality, oracle_agreement,
    pst_amplitude_exact, pst_amplitudes_exact, pst_pair, spectrum, strongly_cospectral_to_zero,
    verify_subgroup, wht_spectrum, CayleyGraph, FiniteAbelianGroup, SpectrumTable,
    DEFAULT_TOLERANCE,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const ORACLE_TOL: f64 = 1e-8;
const CATALOG_LIMIT: Duration = Duration::from_secs(1);
const CONSTRUCTION_LIMIT: Duration = Duration::from_secs(5);
const ORACLE_LIMIT: Duration = Duration::from_secs(60);
const WHT_LIMIT: Duration = Duration::from_secs(5);
const RANDOM_PER_DIM: usize = 100;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn table_spectrum(table: &SpectrumTable) -> Vec<(i64, usize)> {
    table
        .integer_spectrum()
        .expect("cubelike spectra are integral")
}

fn random_corpus() -> Vec<CayleyGraph> {
    common::random_cubelike(3..=10, RANDOM_PER_DIM, 0x5eed)
}

// (degree, spectrum) rows of the catalog table
const CATALOG_TABLE: [(usize, [(i64, usize); 7]); 6] = [
    (
        10,
        [(-6, 1), (-4, 4), (-2, 8), (0, 8), (2, 6), (4, 4), (10, 1)],
    ),
    (
        11,
        [(-5, 3), (-3, 6), (-1, 8), (1, 8), (3, 4), (5, 2), (11, 1)],
    ),
    (
        12,
        [(-6, 2), (-4, 3), (-2, 8), (0, 8), (2, 6), (4, 4), (12, 1)],
    ),
    (
        13,
        [(-5, 4), (-3, 5), (-1, 8), (1, 8), (3, 4), (5, 2), (13, 1)],
    ),
    (
        14,
        [(-6, 2), (-4, 4), (-2, 7), (0, 8), (2, 6), (4, 4), (14, 1)],
    ),
    (
        15,
        [(-5, 4), (-3, 6), (-1, 7), (1, 8), (3, 4), (5, 2), (15, 1)],
    ),
];

fn catalog_spectra() -> Outcome {
    let start = Instant::now();
    let catalog = appendix_catalog();
    let spectra: Vec<_> = catalog.iter().map(|x| spectrum(x).unwrap()).collect();
    let elapsed = start.elapsed();
    for (k, ((degree, row), (x, s))) in CATALOG_TABLE
        .iter()
        .zip(catalog.iter().zip(&spectra))
        .enumerate()
    {
        ensure(x.degree() == *degree, || {
            format!("entry {} has degree {}", k + 1, x.degree())
        })?;
        let got = table_spectrum(s);
        ensure(got == row.to_vec(), || format!("entry {}: {got:?}", k + 1))?;
    }
    ensure(elapsed < CATALOG_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!("6 rows exact in {elapsed:?}"))
}

fn size_four_sets() -> Outcome {
    let mut sizes = Vec::new();
    for (k, x) in appendix_catalog().iter().enumerate() {
        for (label, y) in [("graph", x.clone()), ("complement", x.complement())] {
            let h = strongly_cospectral_to_zero(&y).unwrap();
            ensure(h.len() == 4, || {
                format!("{label} {}: |H| = {}", k + 1, h.len())
            })?;
            ensure(verify_subgroup(y.group(), &h), || {
                format!("{label} {}: not a subgroup", k + 1)
            })?;
            sizes.push(h.len());
        }
    }
    Ok(format!("{} graphs with |H| = 4", sizes.len()))
}

fn constructions() -> Outcome {
    let mut slowest = Duration::ZERO;
    for d in [5, 7, 9, 11] {
        let start = Instant::now();
        let odd = construct_odd(d).unwrap();
        let h = strongly_cospectral_to_zero(&odd.graph).unwrap();
        slowest = slowest.max(start.elapsed());
        ensure(odd.sigma.coords().iter().all(|&c| c == 1), || {
            format!("odd d={d}: sigma is not all-ones")
        })?;
        ensure(odd.predicted().iter().all(|p| h.contains(p)), || {
            format!("odd d={d}: prediction missing from H")
        })?;
        ensure(h.len() >= 4, || format!("odd d={d}: |H| = {}", h.len()))?;

        let start = Instant::now();
        let even = construct_even(d).unwrap();
        let h = strongly_cospectral_to_zero(&even.graph).unwrap();
        slowest = slowest.max(start.elapsed());
        let g = even.graph.group();
        ensure(even.sigma == g.basis(d), || {
            format!("even d={d}: sigma is not e_(d+1)")
        })?;
        for p in [g.zero(), g.basis(d), even.generator.clone()] {
            ensure(h.contains(&p), || {
                format!("even d={d}: {} missing from H", p.to_bitstring())
            })?;
        }
        ensure(h.len() >= 4, || format!("even d={d}: |H| = {}", h.len()))?;
    }
    ensure(slowest < CONSTRUCTION_LIMIT, || {
        format!("slowest run {slowest:?}")
    })?;
    Ok(format!("d in {{5,7,9,11}}, slowest run {slowest:?}"))
}

fn small_hypercubes() -> Outcome {
    for d in [3, 4] {
        let x = hypercube(d);
        let g = x.group();
        let h = strongly_cospectral_to_zero(&x).unwrap();
        let ones = g.element(vec![1; d]).unwrap();
        ensure(h == vec![g.zero(), ones], || format!("d={d}: H = {h:?}"))?;
        let bound = 1usize << (d.div_ceil(2) - 1);
        ensure(h.len() == bound, || {
            format!("d={d}: |H| = {} vs bound {bound}", h.len())
        })?;
    }
    Ok("H = {0, 1...1} for d = 3, 4".into())
}

fn bound_invariants() -> Outcome {
    let random = random_corpus();
    let constructed = common::constructed_cubelike();
    let mut checked = 0;
    for x in random.iter().chain(&constructed) {
        let r = build_report(x).unwrap();
        let d = x.group().rank();
        let label = || format!("{x}");
        ensure(r.verdicts.subgroup, || {
            format!("not a subgroup: {}", label())
        })?;
        ensure(r.verdicts.mult_bound, || {
            format!("|H| m > |G|: {}", label())
        })?;
        if d >= 3 {
            ensure(r.verdicts.cube_mult == Some(true), || {
                format!("max multiplicity too small: {}", label())
            })?;
            ensure(r.verdicts.cube_size == Some(true), || {
                format!("|H| too large: {}", label())
            })?;
        }
        if x.vertex_count() >= 5 {
            ensure(r.verdicts.third_bound == Some(true), || {
                format!("|H| > |V|/3: {}", label())
            })?;
        }
        ensure(check_cube_identity(x).unwrap(), || {
            format!("trace identity fails: {}", label())
        })?;
        checked += 1;
    }
    for x in common::constructed_products() {
        let r = build_report(&x).unwrap();
        ensure(r.verdicts.all_hold(), || {
            format!("verdicts {:?} on {x}", r.verdicts)
        })?;
        checked += 1;
    }
    let per_dim = random.len() / 8;
    Ok(format!(
        "{checked} graphs ({per_dim} random per d in 3..=10)"
    ))
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut graphs: Vec<CayleyGraph> = random_corpus()
        .into_iter()
        .chain(common::constructed_cubelike())
        .chain(common::constructed_products())
        .chain(common::random_mixed(10, 0xab))
        .filter(|x| x.vertex_count() <= 64)
        .collect();
    graphs.push(cycle_product(&hypercube(2), 5).unwrap());
    for x in &graphs {
        let agree = oracle_agreement(x, ORACLE_TOL).map_err(|e| format!("{x}: {e}"))?;
        ensure(agree, || format!("disagreement on {x}"))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < ORACLE_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!("{} graphs agree in {elapsed:?}", graphs.len()))
}

fn perfect_state_transfer() -> Outcome {
    let mut with_sigma = 0;
    for x in random_corpus()
        .iter()
        .chain(&common::constructed_cubelike())
    {
        let d = x.group().rank();
        if let Some(sigma) = pst_pair(x).unwrap() {
            let a = pst_amplitude_exact(x, &sigma).unwrap();
            let n = 1i128 << d;
            ensure(a.norm_sqr() == n * n, || {
                format!("|A_sigma|^2 = {} on {x}", a.norm_sqr())
            })?;
            let h = strongly_cospectral_to_zero(x).unwrap();
            ensure(h.contains(&sigma), || format!("sigma not in H on {x}"))?;
            with_sigma += 1;
        }
        if d <= 10 {
            let total: i128 = pst_amplitudes_exact(x)
                .unwrap()
                .iter()
                .map(|a| a.norm_sqr())
                .sum();
            ensure(total == 1i128 << (2 * d), || {
                format!("sum |A_g|^2 = {total} on {x}")
            })?;
        }
    }
    Ok(format!(
        "{with_sigma} graphs with sigma != 0 transfer perfectly"
    ))
}

fn product_preservation() -> Outcome {
    let base = &appendix_catalog()[0];
    let base_h = strongly_cospectral_to_zero(base).unwrap();
    let mut sizes = Vec::new();
    for (m, vertices) in [(3, 96), (5, 160), (7, 224)] {
        let y = cycle_product(base, m).unwrap();
        ensure(y.vertex_count() == vertices, || {
            format!("m={m}: {} vertices", y.vertex_count())
        })?;
        ensure(y.degree() == base.degree() + 2, || {
            format!("m={m}: degree {}", y.degree())
        })?;
        let h = strongly_cospectral_to_zero(&y).unwrap();
        ensure(h.len() >= 4, || format!("m={m}: |H| = {}", h.len()))?;
        for g in &base_h {
            let mut coords = g.coords().to_vec();
            coords.push(0);
            let lifted = y.group().element(coords).unwrap();
            ensure(h.contains(&lifted), || {
                format!("m={m}: lift of {g} missing")
            })?;
        }
        sizes.push(h.len());
    }
    let prism = cycle_product(&hypercube(1), 3).unwrap();
    let g = prism.group();
    let pair = idempotent_strong_cospectrality(
        &prism,
        &g.zero(),
        &g.element(vec![1, 0]).unwrap(),
        DEFAULT_TOLERANCE,
    )
    .unwrap();
    ensure(pair, || {
        "prism pair ((0,0),(1,0)) not strongly cospectral".into()
    })?;
    Ok(format!(
        "|H| = {sizes:?} for m = 3, 5, 7; prism pair confirmed"
    ))
}

fn fast_path() -> Outcome {
    let mut compared = 0;
    for x in random_corpus()
        .iter()
        .chain(&common::constructed_cubelike())
        .chain(&common::random_cubelike(11..=12, 5, 0xf00d))
        .filter(|x| x.group().rank() <= 12)
    {
        let fast = SpectrumTable::from_integer_eigenvalues(&wht_spectrum(x).unwrap());
        let slow = spectrum(x).unwrap();
        ensure(table_spectrum(&fast) == table_spectrum(&slow), || {
            format!("multisets differ on {x}")
        })?;
        compared += 1;
    }
    let g = FiniteAbelianGroup::cube(20);
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let x = CayleyGraph::from_elements(
        g.clone(),
        g.elements().skip(1).filter(|_| rng.random_bool(0.5)),
    )
    .unwrap();
    let start = Instant::now();
    let eigenvalues = wht_spectrum(&x).unwrap();
    let elapsed = start.elapsed();
    ensure(eigenvalues[0] == x.degree() as i64, || {
        "trivial character is not the degree".into()
    })?;
    ensure(elapsed < WHT_LIMIT, || format!("d=20 took {elapsed:?}"))?;
    Ok(format!(
        "{compared} graphs agree; d=20 transform in {elapsed:?}"
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("catalog spectra match the table exactly", catalog_spectra),
        (
            "catalog graphs and complements have |H| = 4",
            size_four_sets,
        ),
        (
            "constructed families contain the predicted sets",
            constructions,
        ),
        ("3- and 4-cube meet the size bound", small_hypercubes),
        (
            "bounds and trace identity hold on the corpus",
            bound_invariants,
        ),
        (
            "idempotent oracle agrees with the detector",
            oracle_equivalence,
        ),
        ("perfect state transfer to sigma", perfect_state_transfer),
        (
            "cycle products keep strong cospectrality",
            product_preservation,
        ),
        (
            "Walsh-Hadamard path matches character enumeration",
            fast_path,
        ),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
