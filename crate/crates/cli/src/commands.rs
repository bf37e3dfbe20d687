use std::collections::BTreeSet;
use std::fmt::Write as _;

use anyhow::{bail, Context, Result};
use flagcert::certify::{
    self, chevalley_table, evaluate, gr1_table, gr2_table, search, Evaluation, Resolution, SearchOptions, SearchOutcome,
    SweepReport, Tier,
};
use flagcert::coeffs::{chevalley, gr2_constant, structure_constant};
use flagcert::gc_polytope::lattice_points;
use flagcert::kogan::{agrees_with_delta, degeneration_union, enumerate_reduced, from_positions};
use flagcert::ladder::{decompose_weight, phi, psi, weight_set};
use flagcert::pluecker::{delta_schubert, delta_uv};
use flagcert::weyl::grassmannian_perm;
use flagcert::{Edge, Error, FaceUnion, ParabolicShape, Partition, Permutation, Polytope};
use serde::Serialize;
use serde_json::json;

use crate::{
    store, CertifyArgs, Command, ConstantArgs, FacesArgs, Format, KoganArgs, LatticeArgs, Outcome, PolytopeArgs,
    SearchArgs, ShapeArg, SweepArgs, VerticesArgs, EXIT_FAILED, EXIT_OK, EXIT_UNSUPPORTED,
};

pub fn run(command: &Command, format: Format) -> Result<Outcome> {
    match command {
        Command::Constant(a) => cmd_constant(a, format),
        Command::Certify(a) => cmd_certify(a, format),
        Command::Search(a) => cmd_search(a, format),
        Command::Sweep(a) => cmd_sweep(a, format),
        Command::Polytope(a) => cmd_polytope(a, format),
        Command::Faces(a) => cmd_faces(a, format),
        Command::Vertices(a) => cmd_vertices(a, format),
        Command::Kogan(a) => cmd_kogan(a, format),
        Command::Anticanonical(a) => cmd_anticanonical(a, format),
        Command::LatticePoints(a) => cmd_lattice_points(a, format),
    }
}

fn shape_of(a: &ShapeArg) -> Result<ParabolicShape> {
    Ok(ParabolicShape::parse(&a.shape)?)
}

fn perm(text: &str, n: usize) -> Result<Permutation> {
    Permutation::parse(text, Some(n)).with_context(|| format!("permutation {text:?}"))
}

fn min_rep(shape: &ParabolicShape, text: &str) -> Result<Permutation> {
    let p = perm(text, shape.n())?;
    if !shape.contains_min_rep(&p) {
        bail!(Error::NotMinimal { perm: p.to_string(), shape: shape.to_string() });
    }
    Ok(p)
}

fn parse_lambda(text: &str) -> Result<Vec<i64>> {
    text.trim_matches(|c| c == '(' || c == ')' || c == '[' || c == ']')
        .split(',')
        .map(|x| x.trim().parse::<i64>().with_context(|| format!("top row entry {x:?}")))
        .collect()
}

fn json_text<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn tsv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut out = header.join("\t") + "\n";
    for row in rows {
        out += &row.join("\t");
        out.push('\n');
    }
    out
}

fn words(ps: &[Permutation]) -> String {
    ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
}

fn cmd_constant(a: &ConstantArgs, format: Format) -> Result<Outcome> {
    let shape = shape_of(&a.shape)?;
    let n = shape.n();
    let (factors, w, partitions) = match (&a.mu, &a.nu, &a.eta) {
        (Some(mu), Some(nu), Some(eta)) => {
            let m = shape.is_grassmannian().context("partitions need a Grassmannian shape")?;
            let parts: Vec<Partition> =
                [mu, nu, eta].iter().map(|s| s.parse::<Partition>()).collect::<flagcert::Result<_>>()?;
            let ps: Vec<Permutation> =
                parts.iter().map(|p| grassmannian_perm(p, m, n)).collect::<flagcert::Result<_>>()?;
            (ps[..2].to_vec(), ps[2].clone(), Some((m, parts)))
        }
        (None, None, None) => {
            let u = a.u.as_deref().context("give --u/--v/--w or --mu/--nu/--eta")?;
            let mut factors = vec![min_rep(&shape, u)?];
            for v in &a.v {
                factors.push(min_rep(&shape, v)?);
            }
            let w = min_rep(&shape, a.w.as_deref().context("missing --w")?)?;
            (factors, w, None)
        }
        _ => bail!("give all of --mu, --nu, --eta"),
    };
    let value = structure_constant(&factors, &w)?;
    let mut rule = None;
    if let Some((m, parts)) = &partitions {
        if m == &2 {
            rule = Some(("gr2-reduction", gr2_constant(&parts[0], &parts[1], &parts[2], n)?));
        } else {
            let one = |p: &Partition| p.size() == 1;
            if one(&parts[0]) || one(&parts[1]) {
                let other = if one(&parts[0]) { &parts[1] } else { &parts[0] };
                rule = Some(("chevalley", i64::from(chevalley(other, *m, n).contains(&parts[2]))));
            }
        }
    }
    let agrees = rule.is_none_or(|(_, r)| r == value);
    let provenance = match rule {
        Some((name, _)) => format!("oracle+{name}"),
        None => "oracle".to_string(),
    };
    let text = match format {
        Format::Json => json_text(&json!({
            "shape": shape.to_string(),
            "factors": factors.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "w": w.to_string(),
            "N": value,
            "rule": rule.map(|(_, r)| r),
            "provenance": provenance,
        }))?,
        Format::Tsv => tsv(&["factors", "w", "N", "provenance"], [vec![words(&factors), w.to_string(), value.to_string(), provenance]]),
    };
    Ok(Outcome { code: if agrees { EXIT_OK } else { EXIT_FAILED }, text })
}

fn unsupported(e: &Error) -> Option<Outcome> {
    matches!(e, Error::UnsupportedShape(_)).then(|| Outcome { code: EXIT_UNSUPPORTED, text: format!("unsupported: {e}\n") })
}

fn cmd_certify(a: &CertifyArgs, format: Format) -> Result<Outcome> {
    let shape = shape_of(&a.shape)?;
    let n = shape.n();
    let p = Polytope::new(&shape)?;
    let vs: Vec<Permutation> = a.vs.iter().map(|v| min_rep(&shape, v)).collect::<Result<_>>()?;
    let us: Vec<Permutation> = if a.us.is_empty() {
        vec![Permutation::identity(n); vs.len()]
    } else {
        a.us.iter().map(|u| perm(u, n)).collect::<Result<_>>()?
    };
    let w = min_rep(&shape, &a.w)?;
    let evaluation = match evaluate(&p, &vs, &w, &us) {
        Ok(e) => e,
        Err(e) => return unsupported(&e).ok_or_else(|| e.into()),
    };
    let cert = evaluation.certificate().filter(|c| c.status == certify::Status::Certified);
    if let (Some(path), Some(c)) = (&a.store, cert) {
        store::append(path, &shape, std::slice::from_ref(c))?;
    }
    let code = if cert.is_some() { EXIT_OK } else { EXIT_FAILED };
    let text = match format {
        Format::Json => json_text(&evaluation)?,
        Format::Tsv => {
            let row = match &evaluation {
                Evaluation::Certified(c) => vec![words(&vs), w.to_string(), words(&us), format!("{:?}", c.status).to_lowercase(), c.count.to_string(), c.regular.to_string(), c.oracle.to_string()],
                Evaluation::Failed { obstruction } => vec![words(&vs), w.to_string(), words(&us), format!("failed: {obstruction}"), String::new(), String::new(), String::new()],
            };
            tsv(&["vs", "w", "us", "status", "count", "regular", "oracle"], [row])
        }
    };
    Ok(Outcome { code, text })
}

fn tier_of(k: u8) -> Tier {
    match k {
        1 => Tier::Single,
        2 => Tier::Recipe,
        _ => Tier::Full,
    }
}

fn cmd_search(a: &SearchArgs, format: Format) -> Result<Outcome> {
    let shape = shape_of(&a.shape)?;
    let p = Polytope::new(&shape)?;
    let vs: Vec<Permutation> = a.vs.iter().map(|v| min_rep(&shape, v)).collect::<Result<_>>()?;
    let w = min_rep(&shape, &a.w)?;
    let opts = SearchOptions { min_tier: Tier::Single, max_tier: tier_of(a.max_tier), budget: a.budget, cursor: a.cursor };
    let outcome = match search(&p, &vs, &w, &opts) {
        Ok(o) => o,
        Err(e) => return unsupported(&e).ok_or_else(|| e.into()),
    };
    if let (Some(path), Some(c)) = (&a.store, outcome.certificate()) {
        store::append(path, &shape, std::slice::from_ref(c))?;
    }
    let code = match &outcome {
        SearchOutcome::Certified { certificate, .. } if certificate.status == certify::Status::Certified => EXIT_OK,
        SearchOutcome::Zero { .. } => EXIT_OK,
        _ => EXIT_FAILED,
    };
    let text = match format {
        Format::Json => json_text(&outcome)?,
        Format::Tsv => {
            let row = match &outcome {
                SearchOutcome::Certified { tier, tried, certificate } => {
                    vec!["certified".into(), format!("{}", *tier as u8), tried.to_string(), words(&certificate.us), certificate.count.to_string()]
                }
                SearchOutcome::Zero { reason } => vec!["zero".into(), String::new(), "0".into(), reason.clone(), "0".into()],
                SearchOutcome::Exhausted { tried, next_cursor, .. } => vec![
                    "exhausted".into(),
                    String::new(),
                    tried.to_string(),
                    next_cursor.map(|c| format!("cursor {c}")).unwrap_or_default(),
                    String::new(),
                ],
            };
            tsv(&["outcome", "tier", "tried", "us", "count"], [row])
        }
    };
    Ok(Outcome { code, text })
}

fn resolution_cells(r: &Resolution) -> Vec<String> {
    match r {
        Resolution::Zero => vec!["zero".into(), String::new(), String::new(), String::new()],
        Resolution::Certified { tuple, tier, certificate } => vec![
            "certified".into(),
            format!("{}", *tier as u8),
            format!("{};{}", words(&tuple.factors), tuple.w),
            format!("{} @ {}", words(&certificate.us), certificate.shape),
        ],
        Resolution::Unresolved { tried } => vec!["unresolved".into(), String::new(), format!("tried {tried}"), String::new()],
    }
}

fn sweep_detail(report: &SweepReport) -> String {
    tsv(
        &["class", "kind", "representative", "triples", "tuples", "N", "consistent", "status", "tier", "tuple", "translations"],
        report.classes.iter().map(|c| {
            let mut row = vec![
                c.index.to_string(),
                format!("{:?}", c.kind).to_lowercase(),
                c.representative.to_string(),
                c.triples.to_string(),
                c.tuples.to_string(),
                c.constant.to_string(),
                c.consistent.to_string(),
            ];
            row.extend(resolution_cells(&c.resolution));
            row
        }),
    )
}

fn cmd_sweep(a: &SweepArgs, format: Format) -> Result<Outcome> {
    let shape = shape_of(&a.shape)?;
    let n = shape.n();
    let opts = SearchOptions { budget: a.budget, ..Default::default() };
    let (summary, detail, ok) = if shape.is_complete() {
        let report = certify::sweep(n, a.allow_large, a.direct, &opts)?;
        let ok = report.all_resolved();
        let summary = json!({
            "shape": shape.to_string(),
            "triples": report.triples,
            "classes": report.classes.len(),
            "certified": report.certified,
            "zero": report.zero,
            "unresolved": report.unresolved,
            "consistent": report.classes.iter().all(|c| c.consistent),
            "direct": report.direct,
            "verdict": if ok { "all classes certified or zero" } else { "some classes unresolved" },
        });
        (summary, sweep_detail(&report), ok)
    } else if shape.is_grassmannian() == Some(2) {
        let rows = gr2_table(n, &opts)?;
        let agree = rows.iter().all(|r| match &r.resolution {
            Resolution::Zero => r.oracle == 0,
            Resolution::Certified { certificate, .. } => certificate.count as i64 == r.oracle,
            Resolution::Unresolved { .. } => false,
        });
        let count = |f: fn(&Resolution) -> bool| rows.iter().filter(|r| f(&r.resolution)).count();
        let summary = json!({
            "shape": shape.to_string(),
            "triples": rows.len(),
            "certified": count(|r| matches!(r, Resolution::Certified { .. })),
            "zero": count(|r| matches!(r, Resolution::Zero)),
            "unresolved": count(|r| matches!(r, Resolution::Unresolved { .. })),
            "oracle_agrees": agree,
            "verdict": if agree { "all triples certified or zero" } else { "some triples unresolved" },
        });
        let detail = tsv(
            &["lambda", "mu", "eta", "N", "reduction", "status", "tier", "tuple", "translations"],
            rows.iter().map(|r| {
                let mut row = vec![r.lambda.to_string(), r.mu.to_string(), r.eta.to_string(), r.oracle.to_string(), format!("{:?}", r.reduction)];
                row.extend(resolution_cells(&r.resolution));
                row
            }),
        );
        (summary, detail, agree)
    } else if shape.is_grassmannian() == Some(1) {
        let rows = gr1_table(n)?;
        let ok = rows.iter().all(|(_, _, e)| e.certificate().is_some_and(|c| c.status == certify::Status::Certified));
        let summary = json!({
            "shape": shape.to_string(),
            "triples": rows.len(),
            "certified": rows.iter().filter(|(_, _, e)| e.certificate().is_some()).count(),
            "verdict": if ok { "all triples certified" } else { "some triples unresolved" },
        });
        let detail = tsv(
            &["a", "b", "status"],
            rows.iter().map(|(x, y, e)| vec![x.to_string(), y.to_string(), if e.certificate().is_some() { "certified".into() } else { "failed".into() }]),
        );
        (summary, detail, ok)
    } else if let Some(m) = shape.is_grassmannian() {
        let rows = chevalley_table(m, n)?;
        let ok = rows.iter().all(|(_, _, o)| o.certificate().is_some_and(|c| c.status == certify::Status::Certified));
        let summary = json!({
            "shape": shape.to_string(),
            "chevalley_triples": rows.len(),
            "certified": rows.iter().filter(|(_, _, o)| o.certificate().is_some()).count(),
            "verdict": if ok { "all Chevalley triples certified" } else { "some Chevalley triples unresolved" },
        });
        let detail = tsv(
            &["mu", "eta", "status"],
            rows.iter().map(|(mu, eta, o)| vec![mu.to_string(), eta.to_string(), if o.certificate().is_some() { "certified".into() } else { "unresolved".into() }]),
        );
        (summary, detail, ok)
    } else {
        return Ok(Outcome { code: EXIT_UNSUPPORTED, text: format!("unsupported: no sweep for shape {shape}\n") });
    };
    if let Some(path) = &a.detail {
        std::fs::write(path, &detail).with_context(|| format!("writing {}", path.display()))?;
    }
    let text = match format {
        Format::Json => json_text(&summary)?,
        Format::Tsv => detail,
    };
    Ok(Outcome { code: if ok { EXIT_OK } else { EXIT_FAILED }, text })
}

fn cmd_polytope(a: &PolytopeArgs, format: Format) -> Result<Outcome> {
    let shape = shape_of(&a.shape)?;
    let p = Polytope::new(&shape)?;
    let vertices = p.vertices();
    let regular = vertices.iter().filter(|v| p.is_regular(v)).count();
    let in_vx = match vertices.iter().map(|v| p.in_vx(v)).collect::<flagcert::Result<Vec<bool>>>() {
        Ok(flags) => Some(flags.into_iter().filter(|&x| x).count()),
        Err(Error::UnsupportedShape(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let lattice = match &a.lambda {
        Some(l) => Some(lattice_points(&shape, &parse_lambda(l)?)?.len()),
        None => None,
    };
    let facets: Vec<String> = p.facets().iter().map(Edge::to_string).collect();
    let text = match format {
        Format::Json => {
            let mut v = json!({
                "shape": shape.to_string(),
                "dim": p.dim(),
                "facets": facets.len(),
                "vertices": vertices.len(),
                "regular_vertices": regular,
                "vx_vertices": in_vx,
                "lattice_points": lattice,
            });
            if !a.info {
                v["facet_edges"] = json!(facets);
                v["diagram"] = json!(p.diagram().ascii());
            }
            json_text(&v)?
        }
        Format::Tsv => tsv(
            &["shape", "dim", "facets", "vertices", "regular_vertices", "vx_vertices", "lattice_points"],
            [vec![
                shape.to_string(),
                p.dim().to_string(),
                facets.len().to_string(),
                vertices.len().to_string(),
                regular.to_string(),
                in_vx.map(|x| x.to_string()).unwrap_or_else(|| "unsupported".into()),
                lattice.map(|x| x.to_string()).unwrap_or_default(),
            ]],
        ),
    };
    Ok(Outcome { code: EXIT_OK, text })
}

fn union_output(p: &Polytope, union: &FaceUnion, format: Format) -> Result<String> {
    let faces: Vec<(Vec<String>, i64)> = union
        .faces()
        .iter()
        .map(|f| (p.face_edges(f).iter().map(Edge::to_string).collect(), p.face_dimension(Some(f))))
        .collect();
    Ok(match format {
        Format::Json => json_text(&faces.iter().map(|(e, d)| json!({"edges": e, "dim": d})).collect::<Vec<_>>())?,
        Format::Tsv => tsv(&["dim", "edges"], faces.iter().map(|(e, d)| vec![d.to_string(), e.join(" ")])),
    })
}

fn cmd_faces(a: &FacesArgs, format: Format) -> Result<Outcome> {
    let shape = shape_of(&a.shape)?;
    let n = shape.n();
    let p = Polytope::new(&shape)?;
    let union = if let Some(w) = &a.schubert {
        delta_schubert(&p, &min_rep(&shape, w)?)?
    } else if let Some(v) = &a.v {
        let u = match &a.u {
            Some(u) => perm(u, n)?,
            None => Permutation::identity(n),
        };
        delta_uv(&p, &u, &min_rep(&shape, v)?)?
    } else if !a.edges.is_empty() {
        let edges: Vec<Edge> = a
            .edges
            .iter()
            .flat_map(|s| s.split_whitespace())
            .map(|s| s.parse::<Edge>())
            .collect::<flagcert::Result<_>>()?;
        match p.face_from_edges(&edges)? {
            Some(f) => FaceUnion::single(f),
            None => FaceUnion::empty(),
        }
    } else {
        bail!("give --v, --schubert or --edges");
    };
    Ok(Outcome { code: EXIT_OK, text: union_output(&p, &union, format)? })
}

fn cmd_vertices(a: &VerticesArgs, format: Format) -> Result<Outcome> {
    let shape = shape_of(&a.shape)?;
    let p = Polytope::new(&shape)?;
    let mut rows = Vec::new();
    for v in p.vertices() {
        let regular = p.is_regular(v);
        if a.regular_only && !regular {
            continue;
        }
        let in_vx = match p.in_vx(v) {
            Ok(x) => Some(x),
            Err(Error::UnsupportedShape(_)) => None,
            Err(e) => return Err(e.into()),
        };
        rows.push((p.vertex_row(v), regular, in_vx, p.coordinate_point(v)));
    }
    let text = match format {
        Format::Json => json_text(
            &rows
                .iter()
                .map(|(cells, regular, in_vx, point)| {
                    json!({"cells": cells, "regular": regular, "in_vx": in_vx, "coordinates": point.iter().map(|x| x.to_string()).collect::<Vec<_>>()})
                })
                .collect::<Vec<_>>(),
        )?,
        Format::Tsv => {
            let mut header: Vec<String> = p.box_labels();
            header.extend(["regular".into(), "in_vx".into()]);
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            tsv(
                &header,
                rows.iter().map(|(cells, regular, in_vx, _)| {
                    let mut row = cells.clone();
                    row.push(regular.to_string());
                    row.push(in_vx.map(|x| x.to_string()).unwrap_or_else(|| "unsupported".into()));
                    row
                }),
            )
        }
    };
    Ok(Outcome { code: EXIT_OK, text })
}

fn cmd_kogan(a: &KoganArgs, format: Format) -> Result<Outcome> {
    let n = a.n;
    let faces = if !a.positions.is_empty() {
        vec![from_positions(n, &a.positions, a.dual)?]
    } else if let Some(t) = &a.target {
        enumerate_reduced(&perm(t, n)?, a.dual)
    } else {
        bail!("give --positions or --target");
    };
    let mut comparison = None;
    if a.compare {
        let shape = ParabolicShape::complete(n)?;
        let p = Polytope::new(&shape)?;
        let target = perm(a.target.as_deref().expect("clap requires --target"), n)?;
        // Kogan words multiply to w_0 u for X_u.
        let v = if a.dual { target } else { Permutation::longest(n).mul(&target) };
        let union = degeneration_union(&p, &v, a.dual)?;
        comparison = Some((agrees_with_delta(&p, &v, a.dual)?, union.len()));
    }
    let text = match format {
        Format::Json => json_text(&json!({
            "faces": faces,
            "agrees_with_delta": comparison.map(|c| c.0),
            "union_faces": comparison.map(|c| c.1),
        }))?,
        Format::Tsv => tsv(
            &["dual", "edges", "word", "perm", "reduced"],
            faces.iter().map(|f| {
                vec![
                    f.dual.to_string(),
                    f.edges.iter().map(Edge::to_string).collect::<Vec<_>>().join(" "),
                    f.word.iter().map(|s| format!("s{s}")).collect::<String>(),
                    f.perm.to_string(),
                    f.reduced.to_string(),
                ]
            }),
        ),
    };
    Ok(Outcome { code: EXIT_OK, text })
}

fn cmd_anticanonical(a: &ShapeArg, format: Format) -> Result<Outcome> {
    let shape = shape_of(a)?;
    let p = Polytope::new(&shape)?;
    let diagram = p.diagram();
    let special = diagram.special_paths();
    let k = shape.k();
    let expected_paths: usize = (1..=k).map(|i| shape.cut(i + 1) - shape.cut(i - 1)).sum();
    let distinct: BTreeSet<_> = special.iter().collect();
    let expected_divisors = shape.n() + shape.cut(k) - shape.cut(1);
    let ok = special.len() == expected_paths && distinct.len() == expected_divisors;
    let text = match format {
        Format::Json => json_text(&json!({
            "shape": shape.to_string(),
            "special_paths": special.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "roof_edges": diagram.roof_edges().iter().map(Edge::to_string).collect::<Vec<_>>(),
            "count": special.len(),
            "expected_count": expected_paths,
            "distinct_divisors": distinct.len(),
            "expected_divisors": expected_divisors,
        }))?,
        Format::Tsv => tsv(
            &["roof_edge", "special_path"],
            diagram.roof_edges().iter().zip(&special).map(|(e, p)| vec![e.to_string(), p.to_string()]),
        ),
    };
    Ok(Outcome { code: if ok { EXIT_OK } else { EXIT_FAILED }, text })
}

fn cmd_lattice_points(a: &LatticeArgs, format: Format) -> Result<Outcome> {
    let shape = shape_of(&a.shape)?;
    let lambda = parse_lambda(&a.lambda)?;
    let points = lattice_points(&shape, &lambda)?;
    let weights = weight_set(&shape, &lambda)?;
    let images: BTreeSet<_> = weights.iter().map(phi).collect();
    let point_set: BTreeSet<_> = points.iter().cloned().collect();
    let bijection = images.len() == weights.len() && images == point_set && points.iter().all(|x| phi(&psi(x)) == *x);
    let mut decompositions = Vec::new();
    let mut counts_ok = true;
    for x in &points {
        let paths = decompose_weight(&shape, x)?;
        for &level in shape.cuts() {
            let b = lambda[level - 1] - lambda[level];
            counts_ok &= paths.iter().filter(|p| p.level() == level).count() as i64 == b;
        }
        counts_ok &= paths.iter().filter(|p| p.level() == shape.n()).count() as i64 == lambda[shape.n() - 1];
        decompositions.push((x, paths));
    }
    let ok = bijection && counts_ok;
    let text = match format {
        Format::Json => {
            let mut v = json!({
                "shape": shape.to_string(),
                "lambda": lambda,
                "lattice_points": points.len(),
                "weights": weights.len(),
                "bijection": bijection,
                "path_counts": counts_ok,
            });
            if a.decompose {
                v["points"] = json!(decompositions
                    .iter()
                    .map(|(x, ps)| json!({"pattern": format!("{x:?}"), "paths": ps.iter().map(|p| p.to_string()).collect::<Vec<_>>()}))
                    .collect::<Vec<_>>());
            }
            json_text(&v)?
        }
        Format::Tsv => {
            let mut out = String::new();
            writeln!(out, "pattern\tpaths")?;
            for (x, ps) in &decompositions {
                writeln!(out, "{x:?}\t{}", ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" "))?;
            }
            out
        }
    };
    Ok(Outcome { code: if ok { EXIT_OK } else { EXIT_FAILED }, text })
}
