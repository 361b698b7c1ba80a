use std::f64::consts::PI;
use std::time::Instant;

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use weylorb::analysis::{
    laplace_check, pairs_up_to, shift_operator_check, sigma_k_check, KernelSign, OrbitFourier2, ShiftVariant,
    Variant,
};
use weylorb::orbitalg;
use weylorb::orbitfn::{character, dimension, Kind, OrbitFunction};
use weylorb::transforms::{dst_dct_1d, multivariate_discrete, Kind1d, MultiKind, QuadSpec, TransformPlan};
use weylorb::{RootSystem, Weight, C64, Q};

use crate::args::*;
use crate::commands::{diagram, weight};
use crate::error::CliError;
use crate::output::{Report, Table};

/// Map `f` over `items` on up to `threads` scoped threads, keeping order.
pub fn par_map<T: Sync, R: Send>(threads: usize, items: &[T], f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let threads = threads.max(1).min(items.len().max(1));
    if threads == 1 {
        return items.iter().map(&f).collect();
    }
    let chunk = items.len().div_ceil(threads);
    std::thread::scope(|s| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|c| {
                let f = &f;
                s.spawn(move || c.iter().map(f).collect::<Vec<R>>())
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    })
}

/// Uniform point of the fundamental domain in ω-coordinates, with every
/// barycentric coordinate at least `margin`.
pub fn random_interior(rs: &RootSystem, rng: &mut impl Rng, margin: f64) -> Vec<f64> {
    let n = rs.rank();
    loop {
        let e: Vec<f64> = (0..=n).map(|_| -rng.gen::<f64>().max(1e-300).ln()).collect();
        let total: f64 = e.iter().sum();
        let t: Vec<f64> = e.iter().map(|v| v / total).collect();
        if t.iter().any(|&v| v < margin) {
            continue;
        }
        return (0..n)
            .map(|i| {
                let norm = rs.root_norms()[i].to_f64().unwrap();
                t[i + 1] / rs.marks()[i] as f64 * 2.0 / norm
            })
            .collect();
    }
}

fn random_strict(rs: &RootSystem, rng: &mut impl Rng) -> Weight {
    Weight::from_ints(&(0..rs.rank()).map(|_| rng.gen_range(1..=3)).collect::<Vec<_>>())
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn check_laplace(a: &LaplaceArgs, g: &Global) -> Result<(Report, bool), CliError> {
    let rs = diagram(&a.diagram)?;
    let fixed = match &a.lambda {
        Some(t) if a.orth => {
            let m: Weight = t.parse()?;
            Some(rs.from_orthogonal_exact(&m.0)?)
        }
        Some(t) => Some(weight(&rs, t)?),
        None => None,
    };
    let h = a.h.unwrap_or(if a.sigma == 2 { 1e-3 } else { 1e-4 });
    let tol = g.tolerance.unwrap_or(if a.sigma == 2 { 1e-3 } else { 1e-5 });
    let mut rng = ChaCha8Rng::seed_from_u64(g.seed);
    let mut trials = Vec::with_capacity(a.trials);
    for _ in 0..a.trials {
        let lam = fixed.clone().unwrap_or_else(|| random_strict(&rs, &mut rng));
        let phi = OrbitFunction::new(&rs, Kind::Antisymmetric, &lam)?;
        let x = loop {
            let x = random_interior(&rs, &mut rng, 0.02);
            if phi.eval(&x).norm() > 0.1 {
                break x;
            }
        };
        trials.push((lam, rs.point_to_orthogonal(&x)?));
    }
    let results = par_map(g.threads, &trials, |(lam, x)| sigma_k_check(&rs, lam, x, a.sigma, h));
    let mut rows = Vec::new();
    let mut worst = 0.0f64;
    for ((lam, x), r) in trials.iter().zip(results) {
        let r = r?;
        worst = worst.max(r.rel_err);
        rows.push(json!({"lambda": lam.to_string(), "x_orth": x, "eigenvalue": r.eigenvalue, "rel_err": r.rel_err}));
    }
    let pass = worst < tol;
    let plain = format!(
        "{} on {}: {} trials, h = {h:e}\nmax rel_err: {worst:e}\n{} (tolerance {tol:e})\n",
        if a.sigma == 2 { "sigma_2" } else { "laplace" },
        rs.id(),
        a.trials,
        verdict(pass)
    );
    Ok((
        Report {
            command: "check laplace",
            diagram: Some(rs.id().to_string()),
            parameters: json!({"lambda": a.lambda, "orth": a.orth, "trials": a.trials, "h": h, "sigma": a.sigma, "seed": g.seed}),
            plain,
            payload: json!({"max_rel_err": worst, "tolerance": tol, "pass": pass, "trials": rows}),
            table: None,
        },
        pass,
    ))
}

pub fn check_shift(a: &ShiftArgs, g: &Global) -> Result<(Report, bool), CliError> {
    let rs = diagram(&a.diagram)?;
    let fixed = a.lambda.as_deref().map(|t| weight(&rs, t)).transpose()?;
    let tol = g.tolerance.unwrap_or(1e-10);
    let mut rng = ChaCha8Rng::seed_from_u64(g.seed);
    let n = rs.rank();
    let trials: Vec<(Weight, Vec<f64>, Vec<f64>)> = (0..a.trials)
        .map(|_| {
            let lam = fixed.clone().unwrap_or_else(|| random_strict(&rs, &mut rng));
            let x = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let y = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
            (lam, x, y)
        })
        .collect();
    let variants = [ShiftVariant::Anti, ShiftVariant::Hat, ShiftVariant::OnSymmetric];
    let results = par_map(g.threads, &trials, |(lam, x, y)| {
        variants
            .iter()
            .map(|&v| shift_operator_check(&rs, lam, x, y, v))
            .collect::<Result<Vec<_>, _>>()
    });
    let mut worst = [0.0f64; 3];
    let mut swapped = [0.0f64; 3];
    for r in results {
        for (i, c) in r?.iter().enumerate() {
            worst[i] = worst[i].max(c.rel_err);
            swapped[i] = swapped[i].max(c.swapped_rel_err);
        }
    }
    let pass = worst.iter().all(|&w| w < tol);
    let names = ["D_y on anti", "D^_y on anti", "D_y on sym"];
    let mut plain = format!("shift operators on {}: {} trials\n", rs.id(), a.trials);
    for i in 0..3 {
        plain += &format!("  {}: max rel_err {:e} (swapped factors {:e})\n", names[i], worst[i], swapped[i]);
    }
    plain += &format!("{} (tolerance {tol:e})\n", verdict(pass));
    Ok((
        Report {
            command: "check shift",
            diagram: Some(rs.id().to_string()),
            parameters: json!({"lambda": a.lambda, "trials": a.trials, "seed": g.seed}),
            plain,
            payload: json!({
                "variants": (0..3).map(|i| json!({"name": names[i], "max_rel_err": worst[i], "swapped_max_rel_err": swapped[i]})).collect::<Vec<_>>(),
                "tolerance": tol,
                "pass": pass,
            }),
            table: None,
        },
        pass,
    ))
}

fn hermite_test_function(variant: Variant) -> impl Fn(f64, f64) -> f64 {
    move |a: f64, b: f64| {
        let g = (-0.8 * PI * (a * a + b * b)).exp() * (1.0 + a * b);
        match variant {
            Variant::Anti => (a - b) * g,
            Variant::Sym => (1.0 + (a + b) * (a + b)) * g,
        }
    }
}

pub fn check_hermite(a: &HermiteArgs, g: &Global) -> Result<(Report, bool), CliError> {
    let sign = match a.sign.to_ascii_lowercase().as_str() {
        "minus" | "-" => KernelSign::Minus,
        "plus" | "+" => KernelSign::Plus,
        s => return Err(CliError::Usage(format!("unknown kernel sign {s:?}"))),
    };
    let tol = g.tolerance.unwrap_or(1e-5);
    let spec = QuadSpec { resolution: a.resolution, extent: a.extent, ..Default::default() };
    let mut rows = Vec::new();
    let mut plain = String::new();
    let mut pass = true;
    for variant in [Variant::Anti, Variant::Sym] {
        let t = OrbitFourier2::new(&spec, sign, variant)?;
        let ms = pairs_up_to(a.max_degree, variant);
        let checks = par_map(g.threads, &ms, |m| t.eigen_check(m));
        for (m, c) in ms.iter().zip(checks) {
            let c = c?;
            pass &= c.rel_err < tol;
            plain += &format!(
                "{variant:?} m={:?}: eigenvalue {} residual {:e}\n",
                m.0,
                crate::output::complex_str(c.expected),
                c.rel_err
            );
            rows.push(json!({"variant": format!("{variant:?}"), "m": m.0, "expected": [c.expected.re, c.expected.im], "rel_err": c.rel_err}));
        }
        let r4 = t.fourth_power_residual(hermite_test_function(variant));
        pass &= r4 < 10.0 * tol;
        plain += &format!("{variant:?} fourth power residual {r4:e}\n");
        rows.push(json!({"variant": format!("{variant:?}"), "fourth_power_residual": r4}));
    }
    plain += &format!("{} (tolerance {tol:e}, fourth power {:e})\n", verdict(pass), 10.0 * tol);
    Ok((
        Report {
            command: "check hermite",
            diagram: None,
            parameters: json!({"max_degree": a.max_degree, "resolution": a.resolution, "extent": a.extent, "sign": a.sign}),
            plain,
            payload: json!({"checks": rows, "pass": pass}),
            table: None,
        },
        pass,
    ))
}

struct Property {
    name: &'static str,
    pass: bool,
    detail: String,
}

fn prop(name: &'static str, f: impl FnOnce() -> Result<(bool, String), CliError>) -> Property {
    match f() {
        Ok((pass, detail)) => Property { name, pass, detail },
        Err(e) => Property { name, pass: false, detail: format!("error: {e}") },
    }
}

fn labels(list: &[&str]) -> Vec<RootSystem> {
    list.iter().map(|l| RootSystem::from_label(l).expect("known diagram")).collect()
}

fn weyl_orders() -> Result<(bool, String), CliError> {
    let want = [("A1", 2), ("A2", 6), ("A3", 24), ("A4", 120), ("B2", 8), ("B3", 48), ("C2", 8), ("C3", 48), ("D4", 192), ("G2", 12)];
    let mut bad = Vec::new();
    for (l, w) in want {
        let rs = diagram(l)?;
        let got = rs.weyl_group()?.len() as u64;
        if got != w || rs.weyl_order() != w {
            bad.push(format!("{l}: {got}"));
        }
    }
    Ok((bad.is_empty(), if bad.is_empty() { "10 diagrams".into() } else { bad.join(", ") }))
}

fn anti_invariance(trials: usize, seed: u64) -> Result<(bool, String), CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for rs in labels(&["A3", "B3", "C3", "D4", "G2"]) {
        let group = rs.weyl_group()?;
        for _ in 0..trials {
            let lam = random_strict(&rs, &mut rng);
            let f = OrbitFunction::new(&rs, Kind::Antisymmetric, &lam)?;
            let x: Vec<f64> = (0..rs.rank()).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let w = &group.elements()[rng.gen_range(0..group.len())];
            let lhs = f.eval(&w.act_f64(&x));
            let rhs = f.eval(&x) * f64::from(w.det());
            worst = worst.max((lhs - rhs).norm() / rhs.norm().max(1.0));
        }
    }
    Ok((worst < 1e-10, format!("max rel {worst:e}")))
}

fn characters() -> Result<(bool, String), CliError> {
    let mut worst = 0.0f64;
    for rs in labels(&["A2", "C2", "G2"]) {
        for lam in [[1, 0], [0, 1], [1, 1], [2, 1]] {
            let lam = Weight::from_ints(&lam);
            let d = dimension(&rs, &lam)? as f64;
            let x: Vec<f64> = (0..rs.rank()).map(|i| 1e-5 * (1.0 + 0.3 * i as f64)).collect();
            let chi = character(&rs, &lam, &x)?;
            worst = worst.max((chi - C64::new(d, 0.0)).norm() / d);
        }
    }
    let a2 = diagram("A2")?;
    let dims = (dimension(&a2, &Weight::from_ints(&[1, 0]))?, dimension(&a2, &Weight::from_ints(&[1, 1]))?);
    Ok((worst < 1e-3 && dims == (3, 8), format!("max rel {worst:e}, A2 dims {dims:?}")))
}

fn finite_transforms() -> Result<(bool, String), CliError> {
    let mut detail = Vec::new();
    let mut pass = true;
    for (l, m) in [("A2", 5), ("C2", 7)] {
        let rs = diagram(l)?;
        let t = TransformPlan::new(&rs, m)?;
        let f: Vec<C64> = (0..t.points().len()).map(|k| C64::new(k as f64 * 0.3 - 1.0, 0.5)).collect();
        let back = t.inverse(&t.forward(&f)?)?;
        let rt = back.iter().zip(&f).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
        let off = t.max_offdiag() / t.norm();
        pass &= off < 1e-9 && rt < 1e-10;
        detail.push(format!("{l} M={m}: offdiag/norm {off:e}, round trip {rt:e}"));
    }
    Ok((pass, detail.join("; ")))
}

fn one_d_transforms(max_n: i64) -> Result<(bool, String), CliError> {
    let kinds = ["sine", "cosine", "dct1", "dct2", "dct3", "dct4", "dst1", "dst2", "dst3", "dst4"];
    let mut worst = 0.0f64;
    for k in kinds {
        let kind: Kind1d = k.parse()?;
        for n in 2..=max_n {
            worst = worst.max(dst_dct_1d(kind, n)?.gram_residual());
        }
    }
    Ok((worst < 1e-12, format!("max residual {worst:e}")))
}

fn multivariate(max_n: i64) -> Result<(bool, String), CliError> {
    let mut worst = 0.0f64;
    let mut kinds: Vec<String> = ["anti_exp", "sym_exp", "anti_sine", "sym_cosine"].map(String::from).to_vec();
    for k in 1..=4 {
        kinds.push(format!("amdct{k}"));
        kinds.push(format!("smdct{k}"));
    }
    for k in &kinds {
        let kind: MultiKind = k.parse()?;
        for n in [2, 3] {
            for size in 2..=max_n {
                let p = multivariate_discrete(kind, n, size)?;
                worst = worst.max(p.plan().gram_residual());
            }
        }
    }
    Ok((worst < 1e-10, format!("max residual {worst:e}")))
}

fn products(seed: u64) -> Result<(bool, String), CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for (l, p, s) in [("A2", [1, 0], [1, 1]), ("A2", [2, 1], [1, 2]), ("C2", [1, 0], [2, 1]), ("C2", [1, 1], [1, 1])] {
        let rs = diagram(l)?;
        let (p, s) = (Weight::from_ints(&p), Weight::from_ints(&s));
        let sum = orbitalg::product_plain_signed(&rs, &p, &s)?;
        let fp = OrbitFunction::new(&rs, Kind::Symmetric, &p)?;
        let fs = OrbitFunction::new(&rs, Kind::Antisymmetric, &s)?;
        let terms: Vec<(i64, OrbitFunction)> = sum
            .terms
            .iter()
            .map(|t| Ok((t.coeff, OrbitFunction::new(&rs, Kind::Antisymmetric, &t.label)?)))
            .collect::<Result<_, weylorb::Error>>()?;
        for _ in 0..20 {
            let x: Vec<f64> = (0..2).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let lhs = fp.eval(&x) * fs.eval(&x);
            let rhs: C64 = terms.iter().map(|(c, f)| f.eval(&x) * *c as f64).sum();
            worst = worst.max((lhs - rhs).norm());
        }
    }
    Ok((worst < 1e-9, format!("max abs {worst:e}")))
}

fn laplace(trials: usize, seed: u64) -> Result<(bool, String), CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for rs in labels(&["A2", "A3", "B3", "C2", "C3", "D4"]) {
        for _ in 0..trials {
            let lam = random_strict(&rs, &mut rng);
            let phi = OrbitFunction::new(&rs, Kind::Antisymmetric, &lam)?;
            let x = loop {
                let x = random_interior(&rs, &mut rng, 0.02);
                if phi.eval(&x).norm() > 0.1 {
                    break x;
                }
            };
            worst = worst.max(laplace_check(&rs, &lam, &rs.point_to_orthogonal(&x)?, 1e-4)?.rel_err);
        }
    }
    let c2 = diagram("C2")?;
    let lam = c2.from_orthogonal_exact(&[Q::from_integer(2), Q::from_integer(1)])?;
    let x = c2.point_to_orthogonal(&[0.3, 0.2])?;
    let s2 = sigma_k_check(&c2, &lam, &x, 2, 1e-3)?.rel_err;
    Ok((worst < 1e-5 && s2 < 1e-3, format!("laplace max rel {worst:e}, C2 sigma_2 {s2:e}")))
}

fn shifts(seed: u64) -> Result<(bool, String), CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for rs in labels(&["A2", "C2", "G2", "B3"]) {
        let n = rs.rank();
        for _ in 0..5 {
            let lam = random_strict(&rs, &mut rng);
            let x: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let y: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
            for v in [ShiftVariant::Anti, ShiftVariant::Hat, ShiftVariant::OnSymmetric] {
                worst = worst.max(shift_operator_check(&rs, &lam, &x, &y, v)?.rel_err);
            }
        }
    }
    Ok((worst < 1e-10, format!("max rel {worst:e}")))
}

fn hermite(resolution: usize, threads: usize) -> Result<(bool, String), CliError> {
    let spec = QuadSpec { resolution, extent: 6.0, ..Default::default() };
    let mut worst = 0.0f64;
    let mut fourth = 0.0f64;
    for variant in [Variant::Anti, Variant::Sym] {
        let t = OrbitFourier2::new(&spec, KernelSign::Minus, variant)?;
        let ms = pairs_up_to(4, variant);
        for c in par_map(threads, &ms, |m| t.eigen_check(m)) {
            worst = worst.max(c?.rel_err);
        }
        fourth = fourth.max(t.fourth_power_residual(hermite_test_function(variant)));
    }
    Ok((worst < 1e-5 && fourth < 1e-4, format!("eigen max {worst:e}, fourth power {fourth:e}")))
}

pub fn selftest(a: &SelftestArgs, g: &Global) -> Result<(Report, bool), CliError> {
    let full = a.full;
    let start = Instant::now();
    let seed = g.seed;
    let props = vec![
        prop("weyl group orders", weyl_orders),
        prop("anti-invariance", || anti_invariance(if full { 50 } else { 5 }, seed)),
        prop("characters at small x", characters),
        prop("finite transform orthogonality", finite_transforms),
        prop("1-D transform orthogonality", || one_d_transforms(if full { 16 } else { 8 })),
        prop("multivariate transform orthogonality", || multivariate(if full { 8 } else { 4 })),
        prop("orbit products", || products(seed)),
        prop("laplace eigenvalue", || laplace(if full { 20 } else { 2 }, seed)),
        prop("shift operators", || shifts(seed)),
        prop("hermite eigenfunctions", || hermite(if full { 400 } else { 160 }, g.threads)),
    ];
    let pass = props.iter().all(|p| p.pass);
    let mut plain = String::new();
    for p in &props {
        plain += &format!("{} {}: {}\n", verdict(p.pass), p.name, p.detail);
    }
    let secs = start.elapsed().as_secs_f64();
    plain += &format!("{} of {} properties passed in {secs:.1} s\n", props.iter().filter(|p| p.pass).count(), props.len());
    let table = Table {
        header: vec!["property".into(), "status".into(), "detail".into()],
        rows: props.iter().map(|p| vec![p.name.into(), verdict(p.pass).into(), p.detail.clone()]).collect(),
    };
    let payload: Value = json!({
        "properties": props.iter().map(|p| json!({"name": p.name, "pass": p.pass, "detail": p.detail})).collect::<Vec<_>>(),
        "pass": pass,
        "seconds": secs,
    });
    Ok((
        Report {
            command: "selftest",
            diagram: None,
            parameters: json!({"full": full, "seed": seed}),
            plain,
            payload,
            table: Some(table),
        },
        pass,
    ))
}
