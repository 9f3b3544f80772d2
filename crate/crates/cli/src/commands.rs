use std::io::Write;

use orecodec_core::codes::{
    annihilator_dual, check_equivalence, dual_context, find_equivalence, is_sequential, search_size,
    weight_profile, SequentialVariant, DEFAULT_ENUM_LIMIT,
};
use orecodec_core::plt::{companion, CompanionKind};
use orecodec_core::poly::{conjugacy_class, conjugacy_classes, conjugate, min_poly_of_set};
use orecodec_core::spectral::in_idealizer_x;
use orecodec_core::wedderburn::{diagonalizes, is_p_independent, is_wedderburn, vandermonde};
use orecodec_core::{
    Decomposition, Error, FieldCtx, OrePoly, PolycyclicCode, Result, Side, WedderburnData,
};
use serde_json::{json, Map, Value};

use crate::args::{CodeArgs, Command, SideArg, SubspaceArgs, VariantArg, WedderburnArgs};
use crate::encode::{self, parse_elem, parse_poly, parse_vec};

/// A result object plus lines shown only in text mode.
pub struct Report {
    pub json: Value,
    pub notes: Vec<(String, String)>,
}

impl Report {
    fn new(json: Value) -> Self {
        Report { json, notes: Vec::new() }
    }

    fn note(mut self, key: &str, p: &OrePoly) -> Self {
        self.notes.push((key.to_string(), p.to_text()));
        self
    }
}

pub struct Env {
    pub force: bool,
    /// Enumeration cap, from `ORECODEC_MAX_ENUM` or the default.
    pub max_enum: u128,
}

impl Env {
    pub fn from_process(force: bool) -> Result<Self> {
        let max_enum = match std::env::var("ORECODEC_MAX_ENUM") {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("ORECODEC_MAX_ENUM={v:?} is not a number")))?,
            Err(_) => DEFAULT_ENUM_LIMIT,
        };
        Ok(Env { force, max_enum })
    }

    fn cost(&self, what: &str, size: u128) {
        if self.force {
            let _ = writeln!(std::io::stderr(), "estimated cost: {size} {what}");
        }
    }
}

fn side(s: SideArg) -> Side {
    match s {
        SideArg::Right => Side::Right,
        SideArg::Left => Side::Left,
    }
}

fn side_name(s: Side) -> &'static str {
    match s {
        Side::Right => "right",
        Side::Left => "left",
    }
}

fn context_json(ctx: &FieldCtx) -> Value {
    json!({
        "field": ctx.spec(),
        "sigma": ctx.sigma_power(),
        "beta": ctx.beta().index(),
    })
}

fn modulus_degree(f: &OrePoly) -> Result<usize> {
    match f.degree() {
        Some(n) if f.is_monic() => Ok(n),
        _ => Err(Error::NotMonic),
    }
}

fn build_code(ctx: &FieldCtx, a: &CodeArgs) -> Result<PolycyclicCode> {
    let f = parse_poly(ctx, &a.f)?;
    let g = parse_poly(ctx, &a.g)?;
    PolycyclicCode::from_generator(&f, &g, side(a.side))
}

fn code_json(code: &PolycyclicCode) -> Value {
    json!({
        "context": context_json(code.ctx()),
        "f": encode::poly(code.modulus()),
        "g": encode::poly(code.generator()),
        "side": side_name(code.side()),
        "n": code.len(),
        "k": code.dim(),
        "basis": encode::rows(code.code().basis()),
    })
}

fn wedderburn(ctx: &FieldCtx, a: &WedderburnArgs) -> Result<WedderburnData> {
    let f = parse_poly(ctx, &a.f)?;
    match &a.points {
        Some(p) => WedderburnData::new(&f, &parse_vec(ctx, p)?),
        None => WedderburnData::from_modulus(&f)?
            .ok_or_else(|| Error::PreconditionViolated(vec!["f is not a Wedderburn polynomial".into()])),
    }
}

fn subspace(ctx: &FieldCtx, a: &SubspaceArgs) -> Result<(OrePoly, orecodec_core::LinearCode)> {
    let f = parse_poly(ctx, &a.f)?;
    let n = modulus_degree(&f)?;
    Ok((f, encode::parse_code(ctx, n, &a.basis)?))
}

pub fn run(ctx: &FieldCtx, cmd: &Command, env: &Env) -> Result<Report> {
    Ok(match cmd {
        Command::FieldInfo => {
            let classes: Vec<Vec<u32>> = conjugacy_classes(ctx).into_iter().map(encode::indices).collect();
            Report::new(json!({
                "context": context_json(ctx),
                "p": ctx.characteristic(),
                "m": ctx.degree(),
                "q": ctx.order(),
                "modulus": ctx.modulus().iter().map(u32::to_string).collect::<Vec<_>>().join(","),
                "sigma_table": encode::indices(ctx.elements().map(|a| ctx.sigma(a))),
                "delta_table": encode::indices(ctx.elements().map(|a| ctx.delta(a))),
                "conjugacy_classes": classes,
            }))
        }
        Command::PolyMul { a, b } => {
            let p = parse_poly(ctx, a)?.skew_mul(&parse_poly(ctx, b)?)?;
            Report::new(json!({ "product": encode::poly(&p) })).note("product", &p)
        }
        Command::PolyDiv { a, b, side: s } => {
            let (a, b) = (parse_poly(ctx, a)?, parse_poly(ctx, b)?);
            let (q, r) = match side(*s) {
                Side::Right => a.right_divmod(&b)?,
                Side::Left => a.left_divmod(&b)?,
            };
            Report::new(json!({
                "side": side_name(side(*s)),
                "quotient": encode::poly(&q),
                "remainder": encode::poly(&r),
            }))
            .note("quotient", &q)
            .note("remainder", &r)
        }
        Command::PolyEval { g, a } => {
            let g = parse_poly(ctx, g)?;
            let a = parse_elem(ctx, a)?;
            Report::new(json!({
                "value": g.eval(a).index(),
                "right_roots": encode::indices(g.right_roots()),
            }))
        }
        Command::ConjClass { a, c } => {
            let a = parse_elem(ctx, a)?;
            let mut out = Map::new();
            out.insert("class".into(), json!(encode::indices(conjugacy_class(ctx, a))));
            if let Some(c) = c {
                out.insert("conjugate".into(), json!(conjugate(ctx, a, parse_elem(ctx, c)?)?.index()));
            }
            Report::new(Value::Object(out))
        }
        Command::CodeNew(a) => {
            let code = build_code(ctx, a)?;
            Report::new(code_json(&code)).note("generator", code.generator())
        }
        Command::CodeDual(a) => {
            let code = build_code(ctx, a)?;
            let dctx = dual_context(ctx);
            let n = code.len();
            let dual = orecodec_core::LinearCode::span(&dctx, n, code.code().dual().basis())?;
            let f_dual = code.modulus().map_coeffs(&dctx, |c| ctx.sigma_inv(c));
            let sequential = is_sequential(&dual, &f_dual, code.side(), SequentialVariant::Standard)?;
            Report::new(json!({
                "context": context_json(&dctx),
                "f": encode::poly(&f_dual),
                "n": n,
                "k": dual.dim(),
                "basis": encode::rows(dual.basis()),
                "sequential": sequential,
            }))
            .note("f", &f_dual)
        }
        Command::CodeAnnDual { code, dual } => {
            let code = build_code(ctx, code)?;
            let d = annihilator_dual(&code, side(*dual))?;
            Report::new(json!({
                "dual": match dual { SideArg::Left => "l0", SideArg::Right => "r0" },
                "n": d.len(),
                "k": d.dim(),
                "basis": encode::rows(d.basis()),
            }))
        }
        Command::CodeWeights(a) => {
            let code = build_code(ctx, a)?;
            let size = code.code().size();
            env.cost("codewords", size);
            let limit = if env.force { u128::MAX } else { env.max_enum };
            let w = weight_profile(code.code(), limit)?;
            let dist: Map<String, Value> = w.dist.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
            Report::new(json!({ "min": w.min, "dist": dist }))
        }
        Command::CodeCheck(a) => {
            let (f, space) = subspace(ctx, a)?;
            let m = companion(
                &f,
                match a.side {
                    SideArg::Right => CompanionKind::C,
                    SideArg::Left => CompanionKind::E,
                },
            )?;
            let invariant = space.is_invariant(&m)?;
            let generator = if invariant {
                match PolycyclicCode::from_subspace(&f, &space, side(a.side)) {
                    Ok(c) => Some(c.generator().clone()),
                    Err(Error::PreconditionViolated(_)) => None,
                    Err(e) => return Err(e),
                }
            } else {
                None
            };
            let mut r = Report::new(json!({
                "invariant": invariant,
                "k": space.dim(),
                "g": generator.as_ref().map(encode::poly),
            }));
            if let Some(g) = &generator {
                r = r.note("g", g);
            }
            r
        }
        Command::SeqCheck { space, variant } => {
            let (f, code) = subspace(ctx, space)?;
            let variant = match variant {
                VariantArg::Standard => SequentialVariant::Standard,
                VariantArg::Reversed => SequentialVariant::Reversed,
            };
            Report::new(json!({ "sequential": is_sequential(&code, &f, side(space.side), variant)? }))
        }
        Command::EquivCheck { f1, f2, matrix } => {
            let (f1, f2) = (parse_poly(ctx, f1)?, parse_poly(ctx, f2)?);
            let b = encode::parse_matrix(ctx, matrix)?;
            let r = check_equivalence(&f1, &f2, &b)?;
            Report::new(json!({
                "monomial": r.monomial,
                "invertible": r.invertible,
                "intertwines": r.intertwines,
                "holds": r.holds(),
            }))
        }
        Command::EquivFind { f1, f2 } => {
            let (f1, f2) = (parse_poly(ctx, f1)?, parse_poly(ctx, f2)?);
            env.cost("candidate matrices", search_size(f1.degree().unwrap_or(0), ctx.order()));
            let b = find_equivalence(&f1, &f2, env.force)?;
            Report::new(json!({ "witness": b.map(|b| encode::rows(b.rows())) }))
        }
        Command::WpolyCheck { f } => {
            let f = parse_poly(ctx, f)?;
            let points = is_wedderburn(&f)?;
            Report::new(json!({
                "wedderburn": points.is_some(),
                "points": points.map(|p| encode::vec(&p)),
                "right_roots": encode::indices(f.right_roots()),
            }))
        }
        Command::Minpoly { points } => {
            let pts = parse_vec(ctx, points)?;
            let f = min_poly_of_set(ctx, &pts);
            Report::new(json!({
                "min_poly": encode::poly(&f),
                "degree": f.degree(),
                "p_independent": is_p_independent(ctx, &pts),
            }))
            .note("min_poly", &f)
        }
        Command::Vandermonde { points, f } => {
            let pts = parse_vec(ctx, points)?;
            let v = vandermonde(ctx, &pts);
            let mut out = Map::new();
            out.insert("matrix".into(), json!(encode::rows(v.rows())));
            out.insert("invertible".into(), json!(v.is_invertible()));
            if let Some(f) = f {
                out.insert("diagonalizes".into(), json!(diagonalizes(&parse_poly(ctx, f)?, &pts)?));
            }
            Report::new(Value::Object(out))
        }
        Command::Ms { w, g } => {
            let w = wedderburn(ctx, w)?;
            let t = w.ms_transform(&parse_poly(ctx, g)?)?;
            Report::new(json!({
                "points": encode::vec(w.points()),
                "transform": encode::vec(&t.to_vector(w.n())),
            }))
        }
        Command::MsInv { w, h } => {
            let w = wedderburn(ctx, w)?;
            let g = w.ms_inverse(&parse_poly(ctx, h)?)?;
            Report::new(json!({
                "points": encode::vec(w.points()),
                "inverse": encode::poly(&g),
            }))
            .note("inverse", &g)
        }
        Command::IdealizerCheck { f } => {
            Report::new(json!({ "in_idealizer": in_idealizer_x(&parse_poly(ctx, f)?)? }))
        }
        Command::Decompose { w, g } => decompose(ctx, w, g.as_deref())?,
    })
}

fn decompose(ctx: &FieldCtx, w: &WedderburnArgs, g: Option<&str>) -> Result<Report> {
    let w = wedderburn(ctx, w)?;
    let d = Decomposition::new(&w)?;
    let classes: Vec<Value> = d
        .classes
        .iter()
        .map(|c| json!({ "representative": c.representative.index(), "class": encode::indices(c.class.iter().copied()) }))
        .collect();
    let spaces: Vec<Value> = d
        .spaces
        .iter()
        .map(|s| json!({ "value": s.value.index(), "dim": s.basis.len(), "basis": encode::rows(&s.basis) }))
        .collect();
    let mut out = Map::new();
    out.insert("points".into(), json!(encode::vec(w.points())));
    out.insert("classes".into(), json!(classes));
    out.insert("eigenspaces".into(), json!(spaces));
    out.insert(
        "projections".into(),
        json!(d.projections.iter().map(encode::poly).collect::<Vec<_>>()),
    );
    let mut report_notes = Vec::new();
    for (i, p) in d.projections.iter().enumerate() {
        report_notes.push((format!("projection {i}"), p.to_text()));
    }
    if let Some(g) = g {
        let code = PolycyclicCode::from_generator(w.modulus(), &parse_poly(ctx, g)?, Side::Right)?;
        let comps = d.decompose_code(&code)?;
        let comps: Vec<Value> = comps
            .iter()
            .map(|c| json!({ "dim": c.dim(), "basis": encode::rows(c.basis()) }))
            .collect();
        out.insert("components".into(), json!(comps));
    }
    Ok(Report {
        json: Value::Object(out),
        notes: report_notes,
    })
}

/// `{"error": {"kind", "message"}}`.
pub fn error_json(e: &Error) -> Value {
    json!({ "error": { "kind": e.kind(), "message": e.to_string() } })
}

/// Key/value lines for text mode.
pub fn render_text(r: &Report) -> String {
    let mut out = String::new();
    if let Value::Object(map) = &r.json {
        for (k, v) in map {
            let v = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            out.push_str(&format!("{k}: {v}\n"));
        }
    }
    for (k, v) in &r.notes {
        out.push_str(&format!("{k} (notation): {v}\n"));
    }
    out
}
