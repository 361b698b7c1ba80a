use std::collections::HashMap;
use std::path::Path;

use num_traits::ToPrimitive;
use serde_json::{json, Value};
use weylorb::orbitalg::{self, BranchRule, OrbitSum};
use weylorb::orbitfn::{EvalPoint, Kind, OrbitFunction};
use weylorb::transforms::dct::Kernel1d;
use weylorb::transforms::finite::{default_labels, grid_labels};
use weylorb::transforms::{
    dst_dct_1d, grid_fm, multivariate_discrete, Direction, DiscretePlan, Kind1d, MultiKind, TransformPlan,
};
use weylorb::weyl::{orbit, signed_orbit};
use weylorb::{RootSystem, Weight, C64, Q};

use crate::args::*;
use crate::error::CliError;
use crate::output::*;

pub fn diagram(label: &str) -> Result<RootSystem, CliError> {
    Ok(RootSystem::from_label(label)?)
}

pub fn weight(rs: &RootSystem, text: &str) -> Result<Weight, CliError> {
    let w: Weight = text.parse()?;
    if w.len() != rs.rank() {
        return Err(weylorb::Error::DimensionMismatch { expected: rs.rank(), got: w.len() }.into());
    }
    Ok(w)
}

fn floats(text: &str) -> Result<Vec<f64>, CliError> {
    text.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<f64>()
                .or_else(|_| t.parse::<Q>().map(|q| q.to_f64().unwrap()))
                .map_err(|_| CliError::Usage(format!("bad number {t:?}")))
        })
        .collect()
}

fn ints(m: &[Vec<i64>]) -> Value {
    json!(m)
}

pub fn rootsys_info(label: &str) -> Result<Report, CliError> {
    let rs = diagram(label)?;
    let cartan: Vec<Vec<String>> = rs.cartan().iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect();
    let qrows = |m: &[Vec<Q>]| m.iter().map(|r| q_vec(r)).collect::<Vec<_>>();
    let order = rs.weyl_order();
    let mut plain = format!("diagram: {}\nrank: {}\n|W| = {order}\n", rs.id(), rs.rank());
    plain += &plain_matrix("cartan", &cartan);
    plain += &plain_matrix("cartan_inv", &qrows(rs.cartan_inv()));
    plain += &plain_matrix("metric S", &qrows(rs.metric()));
    plain += &format!("root norms: [{}]\n", q_vec(rs.root_norms()).join(", "));
    plain += &format!("marks: {:?}\ncomarks: {:?}\n", rs.marks(), rs.comarks());
    Ok(Report {
        command: "rootsys info",
        diagram: Some(rs.id().to_string()),
        parameters: json!({}),
        plain,
        payload: json!({
            "diagram": rs.id().to_string(),
            "rank": rs.rank(),
            "cartan": ints(rs.cartan()),
            "cartan_inv": q_matrix(rs.cartan_inv()),
            "metric": q_matrix(rs.metric()),
            "metric_inv": q_matrix(rs.metric_inv()),
            "root_norms": q_json(rs.root_norms()),
            "marks": rs.marks(),
            "comarks": rs.comarks(),
            "rho": q_json(&rs.rho().0),
            "weyl_order": order,
        }),
        table: None,
    })
}

pub fn orbit_cmd(action: &OrbitAction) -> Result<Report, CliError> {
    let (args, signed) = match action {
        OrbitAction::Signed(a) => (a, true),
        OrbitAction::Plain(a) => (a, false),
    };
    let rs = diagram(&args.diagram)?;
    let lam = weight(&rs, &args.lambda)?;
    let pts: Vec<(Weight, i8)> = if signed {
        signed_orbit(&rs, &lam)?.points
    } else {
        orbit(&rs, &lam)?.into_iter().map(|p| (p, 1)).collect()
    };
    let n = rs.rank();
    let mut header: Vec<String> = (1..=n).map(|i| format!("w{i}")).collect();
    if signed {
        header.push("sign".into());
    }
    let rows: Vec<Vec<String>> = pts
        .iter()
        .map(|(p, s)| {
            let mut r = q_vec(&p.0);
            if signed {
                r.push(s.to_string());
            }
            r
        })
        .collect();
    let mut plain = format!("{} orbit of {lam}: {} points\n", if signed { "signed" } else { "plain" }, pts.len());
    for (p, s) in &pts {
        if signed {
            plain += &format!("  {} {p}\n", if *s > 0 { '+' } else { '-' });
        } else {
            plain += &format!("  {p}\n");
        }
    }
    let points: Vec<Value> = pts
        .iter()
        .map(|(p, s)| if signed { json!({"w": q_vec(&p.0), "sign": s}) } else { json!({"w": q_vec(&p.0)}) })
        .collect();
    Ok(Report {
        command: if signed { "orbit signed" } else { "orbit plain" },
        diagram: Some(rs.id().to_string()),
        parameters: json!({"lambda": q_vec(&lam.0)}),
        plain,
        payload: json!({"dominant": q_vec(&lam.0), "points": points}),
        table: Some(Table { header, rows }),
    })
}

fn read_rows(path: &Path) -> Result<(Vec<String>, Vec<Vec<String>>), CliError> {
    let mut r = csv::ReaderBuilder::new().trim(csv::Trim::All).from_path(path)?;
    let header = r.headers()?.iter().map(String::from).collect();
    let mut rows = Vec::new();
    for rec in r.records() {
        rows.push(rec?.iter().map(String::from).collect());
    }
    Ok((header, rows))
}

pub fn eval_cmd(a: &EvalArgs) -> Result<Report, CliError> {
    let rs = diagram(&a.weight.diagram)?;
    let lam = weight(&rs, &a.weight.lambda)?;
    let kind: Kind = a.kind.parse()?;
    let f = OrbitFunction::new(&rs, kind, &lam)?;
    let d = if a.orth { rs.orth_dim() } else { rs.rank() };
    let points: Vec<Vec<f64>> = match (&a.x, &a.input) {
        (Some(x), _) => vec![floats(x)?],
        (None, Some(p)) => read_rows(p)?
            .1
            .iter()
            .map(|r| floats(&r.iter().take(d).cloned().collect::<Vec<_>>().join(",")))
            .collect::<Result<_, _>>()?,
        (None, None) => return Err(CliError::Usage("eval needs --x or --in".into())),
    };
    let mut values = Vec::with_capacity(points.len());
    for p in &points {
        let ep = if a.orth { EvalPoint::Orth(p.clone()) } else { EvalPoint::Omega(p.clone()) };
        values.push(f.eval(&ep.to_omega(&rs)?));
    }
    let coord = if a.orth { "e" } else { "x" };
    let mut header: Vec<String> = (1..=d).map(|i| format!("{coord}{i}")).collect();
    header.extend(["re".into(), "im".into()]);
    let rows = points
        .iter()
        .zip(&values)
        .map(|(p, v)| {
            let mut r: Vec<String> = p.iter().map(|c| c.to_string()).collect();
            r.extend([v.re.to_string(), v.im.to_string()]);
            r
        })
        .collect();
    let plain = values.iter().map(|v| complex_str(*v) + "\n").collect();
    Ok(Report {
        command: "eval",
        diagram: Some(rs.id().to_string()),
        parameters: json!({"kind": a.kind, "lambda": q_vec(&lam.0), "orth": a.orth}),
        plain,
        payload: json!({
            "values": points.iter().zip(&values).map(|(p, v)| json!({"x": p, "re": v.re, "im": v.im})).collect::<Vec<_>>()
        }),
        table: Some(Table { header, rows }),
    })
}

fn orbit_sum_json(s: &OrbitSum) -> Value {
    json!(s
        .terms
        .iter()
        .map(|t| json!({"coeff": t.coeff, "label": q_vec(&t.label.0), "signed": t.signed}))
        .collect::<Vec<_>>())
}

pub fn product_cmd(a: &ProductArgs) -> Result<Report, CliError> {
    let rs = diagram(&a.diagram)?;
    let signed: Vec<Weight> = a.signed.iter().map(|s| weight(&rs, s)).collect::<Result<_, _>>()?;
    let plain: Vec<Weight> = a.plain.iter().map(|s| weight(&rs, s)).collect::<Result<_, _>>()?;
    let sum = match (plain.as_slice(), signed.as_slice()) {
        ([p], [s]) => orbitalg::product_plain_signed(&rs, p, s)?,
        ([], [s, t]) => orbitalg::product_signed_signed(&rs, s, t)?,
        ([p, q], []) => orbitalg::product_plain_plain(&rs, p, q)?,
        _ => return Err(CliError::Usage("product needs exactly two factors from --signed/--plain".into())),
    };
    let mut rows = Vec::new();
    for t in &sum.terms {
        let mut r = vec![t.coeff.to_string(), if t.signed { "signed" } else { "plain" }.to_string()];
        r.extend(q_vec(&t.label.0));
        rows.push(r);
    }
    let mut header = vec!["coeff".to_string(), "orbit".to_string()];
    header.extend((1..=rs.rank()).map(|i| format!("w{i}")));
    Ok(Report {
        command: "product",
        diagram: Some(rs.id().to_string()),
        parameters: json!({"signed": a.signed, "plain": a.plain}),
        plain: format!("{sum}\n"),
        payload: json!({"terms": orbit_sum_json(&sum)}),
        table: Some(Table { header, rows }),
    })
}

pub fn branch_cmd(a: &BranchArgs) -> Result<Report, CliError> {
    let rs = diagram(&a.from)?;
    let rule: BranchRule = a.rule.parse()?;
    let m: Vec<Q> = if a.orth {
        let w: Weight = a.lambda.parse()?;
        w.0
    } else {
        rs.to_orthogonal_exact(&weight(&rs, &a.lambda)?)?
    };
    let b = orbitalg::branch(&rs, rule, &m)?;
    let blocks: Vec<String> = b.blocks.iter().map(|(t, r)| format!("{t:?}[{}..{}]", r.start, r.end)).collect();
    let mut plain = format!("source label (orthogonal): ({})\nblocks: {}\n", q_vec(&m).join(", "), blocks.join(" x "));
    for t in &b.terms {
        let labels: Vec<String> = t.labels.iter().map(|l| format!("({})", q_vec(l).join(", "))).collect();
        plain += &format!("  {:+} {}\n", t.coeff, labels.join(" x "));
    }
    plain += &format!("wall points: {}\n", b.wall_points);
    let rows = b
        .terms
        .iter()
        .map(|t| {
            let mut r = vec![t.coeff.to_string()];
            r.extend(t.labels.iter().map(|l| q_vec(l).join(" ")));
            r
        })
        .collect();
    let mut header = vec!["coeff".to_string()];
    header.extend((1..=b.blocks.len()).map(|i| format!("block{i}")));
    Ok(Report {
        command: "branch",
        diagram: Some(rs.id().to_string()),
        parameters: json!({"rule": rule.to_string(), "label_orth": q_vec(&m)}),
        plain,
        payload: json!({
            "blocks": blocks,
            "terms": b.terms.iter().map(|t| json!({
                "coeff": t.coeff,
                "labels": t.labels.iter().map(|l| q_vec(l)).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "wall_points": b.wall_points,
        }),
        table: Some(Table { header, rows }),
    })
}

pub fn grid_cmd(a: &GridArgs) -> Result<Report, CliError> {
    let rs = diagram(&a.diagram)?;
    let g = grid_fm(&rs, a.m)?;
    let n = rs.rank();
    let mut header: Vec<String> = (0..=n).map(|i| format!("s{i}")).collect();
    header.extend((1..=n).map(|i| format!("x{i}")));
    let pts: Vec<_> = g.points.iter().filter(|p| !a.interior || p.is_interior()).collect();
    let rows: Vec<Vec<String>> = pts
        .iter()
        .map(|p| {
            let mut r = vec![p.s0.to_string()];
            r.extend(p.s.iter().map(|v| v.to_string()));
            r.extend(q_vec(&p.coweight_coords(a.m)));
            r
        })
        .collect();
    let table = Table { header, rows };
    Ok(Report {
        command: "grid",
        diagram: Some(rs.id().to_string()),
        parameters: json!({"M": a.m, "interior": a.interior}),
        plain: table.to_csv()?,
        payload: json!({
            "points": pts.iter().map(|p| json!({
                "s0": p.s0,
                "s": p.s,
                "coweight_coords": q_vec(&p.coweight_coords(a.m)),
                "omega_coords": q_vec(&p.omega_coords(&rs, a.m)),
            })).collect::<Vec<_>>()
        }),
        table: Some(table),
    })
}

/// A discrete plan together with exact coordinates of its labels and points.
pub struct Coordinated {
    pub labels: Vec<Vec<Q>>,
    pub points: Vec<Vec<Q>>,
    pub plan: DiscretePlan,
}

fn int_rows(v: &[Vec<i64>]) -> Vec<Vec<Q>> {
    v.iter().map(|r| r.iter().map(|&x| Q::from_integer(x)).collect()).collect()
}

pub fn build_transform(a: &TransformArgs) -> Result<Coordinated, CliError> {
    let need_size = || a.size.ok_or_else(|| CliError::Usage(format!("--N is required for kind {}", a.kind)));
    if a.kind.eq_ignore_ascii_case("orbit") {
        let (Some(d), Some(m)) = (&a.diagram, a.m) else {
            return Err(CliError::Usage("kind orbit needs --diagram and --M".into()));
        };
        let rs = diagram(d)?;
        let t = TransformPlan::new(&rs, m)?;
        return Ok(Coordinated {
            labels: t.labels().iter().map(|w| w.0.clone()).collect(),
            points: t.points().iter().map(|p| p.coweight_coords(m)).collect(),
            plan: t.discrete_plan().clone(),
        });
    }
    if let Ok(k) = a.kind.parse::<MultiKind>() {
        let p = multivariate_discrete(k, a.n, need_size()?)?;
        return Ok(Coordinated {
            labels: int_rows(p.labels()),
            points: p.points().iter().map(|t| p.point_coords(t)).collect(),
            plan: p.plan().clone(),
        });
    }
    let k: Kind1d = a.kind.parse()?;
    if a.n != 1 {
        return Err(CliError::Usage(format!("kind {} is one-dimensional; use an amdct/smdct kind for n > 1", a.kind)));
    }
    let size = need_size()?;
    let kern = Kernel1d::new(k, size)?;
    Ok(Coordinated {
        labels: kern.labels().iter().map(|&l| vec![Q::from_integer(l)]).collect(),
        points: kern.points().iter().map(|&p| vec![kern.point_coord(p)]).collect(),
        plan: dst_dct_1d(k, size)?,
    })
}

/// Column positions of the coordinates and of re/im. Named columns
/// (`{prefix}1..`, `re`, `im`) are used when present, positions otherwise.
fn columns(header: &[String], prefix: &str, d: usize) -> (Vec<usize>, Option<usize>, Option<usize>) {
    let find = |name: &str| header.iter().position(|h| h.eq_ignore_ascii_case(name));
    let named: Option<Vec<usize>> = (1..=d).map(|i| find(&format!("{prefix}{i}"))).collect();
    let coords = named.unwrap_or_else(|| (0..d).collect());
    let after = coords.iter().max().map_or(0, |m| m + 1);
    let re = find("re").or((after < header.len()).then_some(after));
    let im = find("im").or((after + 1 < header.len() && re == Some(after)).then_some(after + 1));
    (coords, re, im)
}

fn parse_complex_rows(
    header: &[String],
    rows: &[Vec<String>],
    keys: &[Vec<Q>],
    prefix: &str,
) -> Result<Vec<C64>, CliError> {
    let d = keys.first().map_or(0, Vec::len);
    let (coords, re, im) = columns(header, prefix, d);
    let index: HashMap<&Vec<Q>, usize> = keys.iter().enumerate().map(|(i, k)| (k, i)).collect();
    if rows.len() != keys.len() {
        return Err(weylorb::Error::LengthMismatch { expected: keys.len(), got: rows.len() }.into());
    }
    let mut out = vec![None; keys.len()];
    for r in rows {
        let cell = |i: usize| r.get(i).ok_or_else(|| CliError::Usage(format!("row {r:?} is too short")));
        let key: Vec<Q> = coords
            .iter()
            .map(|&i| {
                let t = cell(i)?;
                t.parse::<Q>().map_err(|_| CliError::Usage(format!("bad coordinate {t:?}")))
            })
            .collect::<Result<_, _>>()?;
        let i = *index
            .get(&key)
            .ok_or_else(|| CliError::Usage(format!("coordinates {} are not in the transform's index set", q_vec(&key).join(","))))?;
        let num = |c: Option<usize>| -> Result<f64, CliError> {
            match c {
                None => Ok(0.0),
                Some(c) => {
                    let t = cell(c)?;
                    t.parse().map_err(|_| CliError::Usage(format!("bad value {t:?}")))
                }
            }
        };
        if out[i].replace(C64::new(num(re)?, num(im)?)).is_some() {
            return Err(CliError::Usage(format!("coordinates {} given twice", q_vec(&key).join(","))));
        }
    }
    Ok(out.into_iter().map(|v| v.unwrap_or_default()).collect())
}

pub fn transform_cmd(a: &TransformArgs) -> Result<Report, CliError> {
    let dir: Direction = a.direction.parse()?;
    let t = build_transform(a)?;
    let (header, rows) = read_rows(&a.input)?;
    let (in_keys, out_keys, in_prefix, prefix) = match dir {
        Direction::Forward => (&t.points, &t.labels, "x", "l"),
        Direction::Inverse => (&t.labels, &t.points, "l", "x"),
    };
    let v = parse_complex_rows(&header, &rows, in_keys, in_prefix)?;
    let res = t.plan.apply(dir, &v)?;
    let d = out_keys.first().map_or(0, Vec::len);
    let mut header: Vec<String> = (1..=d).map(|i| format!("{prefix}{i}")).collect();
    header.extend(["re".into(), "im".into()]);
    let out_rows: Vec<Vec<String>> = out_keys
        .iter()
        .zip(&res)
        .map(|(k, v)| {
            let mut r = q_vec(k);
            r.extend([v.re.to_string(), v.im.to_string()]);
            r
        })
        .collect();
    let table = Table { header, rows: out_rows };
    Ok(Report {
        command: "transform",
        diagram: a.diagram.clone(),
        parameters: json!({"kind": a.kind, "n": a.n, "N": a.size, "M": a.m, "direction": a.direction}),
        plain: table.to_csv()?,
        payload: json!({
            "values": out_keys.iter().zip(&res).map(|(k, v)| json!({"at": q_vec(k), "re": v.re, "im": v.im})).collect::<Vec<_>>()
        }),
        table: Some(table),
    })
}

pub fn plan_verify(a: &PlanArgs) -> Result<Report, CliError> {
    let rs = diagram(&a.diagram)?;
    let labels = match a.labels {
        LabelSet::Dual => default_labels(&rs, a.m),
        LabelSet::Marks => grid_labels(&rs, a.m),
    };
    let t = TransformPlan::with_labels(&rs, a.m, labels)?;
    let f: Vec<C64> = (0..t.points().len())
        .map(|k| C64::new((0.37 * k as f64).sin(), (0.11 * k as f64 + 0.2).cos()))
        .collect();
    let back = t.inverse(&t.forward(&f)?)?;
    let roundtrip = back.iter().zip(&f).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max);
    let plain = format!(
        "points: {}\nlabels: {}\nnorm M^n|W|: {}\nmax off-diagonal: {:e}\ngram residual: {:e}\nround trip: {:e}\n",
        t.points().len(),
        t.labels().len(),
        t.norm(),
        t.max_offdiag(),
        t.gram_residual(),
        roundtrip
    );
    Ok(Report {
        command: "plan verify",
        diagram: Some(rs.id().to_string()),
        parameters: json!({"M": a.m, "labels": format!("{:?}", a.labels).to_lowercase()}),
        plain,
        payload: json!({
            "points": t.points().len(),
            "labels": t.labels().iter().map(|w| q_vec(&w.0)).collect::<Vec<_>>(),
            "norm": t.norm(),
            "max_offdiag": t.max_offdiag(),
            "gram_residual": t.gram_residual(),
            "roundtrip": roundtrip,
        }),
        table: None,
    })
}
