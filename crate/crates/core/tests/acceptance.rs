//! End-to-end acceptance criteria. Runs as a plain binary so that each
//! criterion prints a single PASS/FAIL line with its wall time; any failure
//! (or a criterion taking 10 seconds or more) makes the process exit nonzero.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qha_core::bounds::{Analysis, ClassicalBounds, DEFAULT_MAX_SIMPLES};
use qha_core::check::{Checker, Outcome};
use qha_core::corpus::{self, FuzzShape};
use qha_core::pathmod::{self, HomDim, PathModuleSum, SimpleSet};
use qha_core::{Algebra, DEFAULT_BASIS_LIMIT};

const FUZZ_SEED: u64 = 20_240_501;
const FUZZ_ALGEBRAS: usize = 200;
const TIME_LIMIT: Duration = Duration::from_secs(10);

type Criterion = Result<(), String>;

fn fin(n: i64) -> HomDim {
    HomDim::Finite(n)
}

fn load(text: &str) -> Algebra {
    Algebra::from_text(text, DEFAULT_BASIS_LIMIT).expect("corpus algebra builds")
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Criterion {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn vertex_range(alg: &Algebra, lo: usize, hi: usize) -> SimpleSet {
    let names: Vec<String> = (lo..=hi).map(|i| i.to_string()).collect();
    SimpleSet::from_names(alg, &names).expect("vertices exist")
}

fn example41(m: usize) -> Criterion {
    let alg = load(&corpus::example41(m).unwrap());
    let an = Analysis::new(&alg);
    let pd: Vec<HomDim> = (1..=m + 2)
        .map(|i| match i {
            1 => HomDim::Infinite,
            i if i <= m - 1 => fin(1),
            _ => fin(0),
        })
        .collect();
    let id: Vec<HomDim> = (1..=m + 2)
        .map(|i| if i == 1 || i == 2 || i >= m { HomDim::Infinite } else { fin(1) })
        .collect();
    expect(&format!("m={m} pd table"), an.pd_simples(), &pd[..])?;
    expect(&format!("m={m} id table"), an.id_simples(), &id[..])?;

    let v = vertex_range(&alg, 3, m - 1);
    let r = an.report(&v);
    expect(&format!("m={m} (a, c, d)"), (r.a, r.c, r.d), (fin(1), fin(1), fin(1)))?;
    let per_projective: Vec<usize> =
        (0..m + 2).map(|i| pathmod::layer_length(&alg, &PathModuleSum::projective(&alg, i), &v)).collect();
    let mut want = vec![1; m + 2];
    want[0] = 2;
    want[1] = 2;
    expect(&format!("m={m} layer lengths of P(i)"), per_projective, want)?;
    expect(&format!("m={m} n"), r.n, 2)?;
    expect(&format!("m={m} db bound"), r.db_bound, fin(7))?;
    expect(&format!("m={m} dsg bound"), r.dsg_bound, Some(0))?;
    expect(
        &format!("m={m} classical"),
        r.classical,
        ClassicalBounds { ll_minus1: m - 2, gldim: HomDim::Infinite, ll_minus2: m - 3 },
    )
}

fn example42(m: usize) -> Criterion {
    let alg = load(&corpus::example42(m).unwrap());
    let an = Analysis::new(&alg);
    let pd: Vec<HomDim> = (1..2 * m)
        .map(|i| match i {
            1 => fin(m as i64 - 1),
            i if i <= m - 1 => fin(1),
            i if i == m => fin(0),
            i => fin((2 * m - 1 - i) as i64),
        })
        .collect();
    let id: Vec<HomDim> = (1..2 * m)
        .map(|i| match i {
            1 => fin(0),
            i if i <= m => fin(1),
            i => fin((i - m) as i64),
        })
        .collect();
    expect(&format!("m={m} pd table"), an.pd_simples(), &pd[..])?;
    expect(&format!("m={m} id table"), an.id_simples(), &id[..])?;
    expect(&format!("m={m} gldim"), an.gldim(), fin(m as i64 - 1))?;
    expect(&format!("m={m} LL"), alg.loewy_length(), m)?;

    let v = vertex_range(&alg, 2, m);
    let r = an.report(&v);
    expect(&format!("m={m} d"), r.d, fin(1))?;
    expect(&format!("m={m} n"), r.n, 2)?;
    expect(&format!("m={m} db bound"), r.db_bound, fin(7))?;
    expect(&format!("m={m} dsg bound"), r.dsg_bound, Some(0))?;
    expect(
        &format!("m={m} classical"),
        r.classical,
        ClassicalBounds { ll_minus1: m - 1, gldim: fin(m as i64 - 1), ll_minus2: m - 2 },
    )
}

fn corpus_algebras() -> Vec<(String, Algebra)> {
    corpus::fixtures().into_iter().map(|(name, text)| (name.to_string(), load(&text))).collect()
}

fn fuzzed_algebras() -> Vec<Algebra> {
    let mut rng = ChaCha8Rng::seed_from_u64(FUZZ_SEED);
    let shape = FuzzShape::default();
    (0..FUZZ_ALGEBRAS).map(|_| corpus::random_algebra(&mut rng, &shape)).collect()
}

/// Run `f` on every algebra, naming the first failure.
fn on_each<'a>(
    algebras: impl IntoIterator<Item = (String, &'a Algebra)>,
    f: impl Fn(usize, &Checker<'a>) -> Outcome,
) -> Criterion {
    for (i, (name, alg)) in algebras.into_iter().enumerate() {
        let checker = Checker::new(alg);
        f(i, &checker).map_err(|v| format!("{name}: {v}\n{}", alg.presentation()))?;
    }
    Ok(())
}

fn named_fuzz(fuzz: &[Algebra]) -> impl Iterator<Item = (String, &Algebra)> {
    fuzz.iter().enumerate().map(|(i, a)| (format!("fuzzed algebra #{i}"), a))
}

fn named_corpus(corpus: &[(String, Algebra)]) -> impl Iterator<Item = (String, &Algebra)> {
    corpus.iter().map(|(n, a)| (n.clone(), a))
}

fn run(label: &str, f: impl FnOnce() -> Criterion) -> bool {
    let start = Instant::now();
    let result = f();
    let elapsed = start.elapsed();
    let verdict = match &result {
        Ok(()) if elapsed < TIME_LIMIT => "PASS".to_string(),
        Ok(()) => format!("FAIL (over the {}s limit)", TIME_LIMIT.as_secs()),
        Err(_) => "FAIL".to_string(),
    };
    println!("{verdict:<5} {label} [{:.2}s]", elapsed.as_secs_f64());
    if let Err(e) = &result {
        println!("      {}", e.replace('\n', "\n      "));
    }
    result.is_ok() && elapsed < TIME_LIMIT
}

fn main() -> ExitCode {
    let corpus = corpus_algebras();
    let start = Instant::now();
    let fuzz = fuzzed_algebras();
    let infinite_gldim = fuzz.iter().filter(|a| !Analysis::new(a).gldim().is_finite()).count();
    println!(
        "generated {} fuzzed algebras (seed {FUZZ_SEED}, max dimension {}, {infinite_gldim} of infinite global dimension) in {:.2}s",
        fuzz.len(),
        fuzz.iter().map(Algebra::dimension).max().unwrap_or(0),
        start.elapsed().as_secs_f64()
    );

    let mut ok = true;
    ok &= run("1. loop-and-arm family, m = 10, 11, 12: pd/id tables, layer lengths, bounds", || {
        [10, 11, 12].into_iter().try_for_each(example41)
    });
    ok &= run("2. two-arm family, m = 9, 10, 11: pd/id tables, gldim, LL, bounds", || {
        [9, 10, 11].into_iter().try_for_each(example42)
    });
    ok &= run("3. classical bounds recovered at V = empty and V = S on the corpus", || {
        on_each(named_corpus(&corpus), |_, c| c.classical_recovery())
    });
    ok &= run("4. layer length at S^<inf is never 1 and is 0 iff gldim is finite", || {
        on_each(named_corpus(&corpus).chain(named_fuzz(&fuzz)), |_, c| c.finite_pd_layer())
    });
    ok &= run("5. path-module and linear-algebra engines agree (pd, id, layer length, LL)", || {
        on_each(named_fuzz(&fuzz), |i, c| {
            c.algebra_invariants()?;
            c.cross_engine_pd()?;
            c.cross_engine_layer_length(FUZZ_SEED + i as u64, 10)
        })
    });
    ok &= run("6. layer length of regular equals coregular; modules bounded by the algebra", || {
        on_each(named_fuzz(&fuzz), |i, c| {
            c.regular_vs_coregular(FUZZ_SEED + i as u64, 10)?;
            c.module_bounded_by_algebra(FUZZ_SEED + i as u64, 10, 20)
        })
    });
    ok &= run("7. torsion-pair axioms, shift identity, syzygy drop on fuzzed modules", || {
        on_each(named_fuzz(&fuzz), |i, c| {
            let mut checks = 0;
            for k in 0..3 {
                let seed = FUZZ_SEED + (3 * i + k) as u64;
                checks += c.torsion_axioms(seed)?;
                checks += c.torsion_functoriality(seed)?;
            }
            Ok(checks)
        })
    });
    ok &= run("8. optimizer: db value <= 7 and consistent, dsg value 0", || {
        for text in [corpus::example41(10).unwrap(), corpus::example42(9).unwrap()] {
            let alg = load(&text);
            let an = Analysis::new(&alg);
            let db = an.optimize_db(DEFAULT_MAX_SIMPLES).map_err(|e| e.to_string())?;
            if db.value > 7 {
                return Err(format!("optimized db bound {} exceeds 7", db.value));
            }
            expect("db bound at the optimizer's V", an.bound_db(&db.v), fin(db.value as i64))?;
            let dsg = an.optimize_dsg(DEFAULT_MAX_SIMPLES).map_err(|e| e.to_string())?;
            expect("optimized dsg bound", dsg.value, 0)?;
            expect("dsg bound at the optimizer's V", an.bound_dsg(&dsg.v), Ok(0))?;
        }
        Ok(())
    });

    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
