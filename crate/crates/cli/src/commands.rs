use crate::args::*;
use anyhow::{anyhow, bail, Context, Result};
use num_complex::Complex64;
use serde::Serialize;
use serde_json::{json, Value};
use weylzeta::algebra::rational::{format_rational, int, parse_rational};
use weylzeta::bernoulli_gen::closed_forms::{c3_p_21111, c3_root_positions, closed_form_p_ar};
use weylzeta::bernoulli_gen::expand::indices_up_to;
use weylzeta::bernoulli_gen::lerch::lerch_coeffs;
use weylzeta::bernoulli_gen::residue::residue_check;
use weylzeta::bernoulli_gen::{bernoulli_table, expand_p};
use weylzeta::lattice_zeta::{s_direct, zeta_r};
use weylzeta::poincare::{eval_minus_one, generalized_poincare, mixed_eval, mixed_eval_enumerated, nonvanishing_tables, relative_poly, resolve_index_set};
use weylzeta::relations::{c3_values, check_g2_values, lerch_relation_check, template_a2, template_a3, template_c3, verify, LhsMode};
use weylzeta::rootsys::format_type_product;
use weylzeta::weyl::{enumerate_weyl, min_coset_reps};
use weylzeta::{parse_system, BernoulliContext, Precision, Rational, RelationReport, RelationSpec, RootSystemData, SumResult, ZetaArgs as SumArgs};

pub struct Outcome {
    pub pass: bool,
}

/// Everything needed to rerun a command; embedded in every report.
#[derive(Serialize)]
struct RunConfig<'a> {
    command: &'static str,
    args: Value,
    precision: PrecisionArg,
    classic_order: bool,
    phi_seed: Option<u64>,
    threads: Option<usize>,
    output: Option<&'a std::path::Path>,
}

struct Report {
    pass: bool,
    text: String,
    result: Value,
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let g = &cli.global;
    let (name, args, report) = match &cli.command {
        Command::Poincare(a) => ("poincare", serde_json::to_value(a)?, poincare(g, a)?),
        Command::Weyl(a) => ("weyl", serde_json::to_value(a)?, weyl(a)?),
        Command::Bernoulli(a) => ("bernoulli", serde_json::to_value(a)?, bernoulli(g, a)?),
        Command::Zeta(a) => ("zeta", serde_json::to_value(a)?, zeta(g, a)?),
        Command::Verify(a) => ("verify", serde_json::to_value(a)?, verify_cmd(g, a)?),
        Command::ResidueCheck(a) => ("residue-check", serde_json::to_value(a)?, residue(a)?),
        Command::LerchCheck(a) => ("lerch-check", serde_json::to_value(a)?, lerch(g, a)?),
    };
    let config = RunConfig {
        command: name,
        args,
        precision: g.precision,
        classic_order: g.classic_order,
        phi_seed: g.phi_seed,
        threads: g.threads,
        output: g.output.as_deref(),
    };
    let doc = json!({
        "tool": "weylzeta",
        "version": env!("CARGO_PKG_VERSION"),
        "config": config,
        "pass": report.pass,
        "result": report.result,
    });
    let rendered = serde_json::to_string_pretty(&doc)?;
    if let Some(path) = &g.output {
        std::fs::write(path, format!("{rendered}\n")).with_context(|| format!("writing {}", path.display()))?;
    }
    if g.json {
        println!("{rendered}");
    } else {
        print!("{}", report.text);
    }
    Ok(Outcome { pass: report.pass })
}

fn precision(g: &Global) -> Precision {
    match g.precision {
        PrecisionArg::Double => Precision::Double,
        PrecisionArg::Extended => Precision::Extended,
    }
}

fn system(s: &str) -> Result<RootSystemData> {
    parse_system(s).map_err(|e| anyhow!("{e}"))
}

fn index_set(d: &RootSystemData, s: Option<&str>) -> Result<Vec<usize>> {
    match s {
        None => Ok(vec![]),
        Some(s) => resolve_index_set(d, s).map_err(|e| anyhow!("{e}")),
    }
}

fn one_based(i: &[usize]) -> Vec<usize> {
    i.iter().map(|x| x + 1).collect()
}

fn parse_complex(s: &str) -> Result<Complex64> {
    let t = s.trim().replace(' ', "");
    if let Some(body) = t.strip_suffix('i') {
        // split at the last sign that is not the leading one or part of an exponent
        let bytes = body.as_bytes();
        let cut = (1..bytes.len()).rev().find(|&p| (bytes[p] == b'+' || bytes[p] == b'-') && !matches!(bytes[p - 1], b'e' | b'E'));
        let (re, im) = match cut {
            Some(p) => (&body[..p], &body[p..]),
            None => ("0", body),
        };
        let im = match im {
            "" | "+" => "1",
            "-" => "-1",
            x => x,
        };
        return Ok(Complex64::new(re.parse()?, im.trim_start_matches('+').parse()?));
    }
    Ok(Complex64::new(t.parse().with_context(|| format!("bad exponent {s:?}"))?, 0.0))
}

fn parse_complexes(v: &[String]) -> Result<Vec<Complex64>> {
    v.iter().map(|x| parse_complex(x)).collect()
}

fn parse_y(d: &RootSystemData, y: Option<&Vec<String>>) -> Result<Vec<Rational>> {
    match y {
        None => Ok(vec![int(0); d.rank]),
        Some(v) if v.len() == 1 && d.rank > 1 && parse_rational(&v[0]).map(|r| r == int(0)).unwrap_or(false) => Ok(vec![int(0); d.rank]),
        Some(v) => {
            if v.len() != d.rank {
                bail!("y needs {} entries, got {}", d.rank, v.len());
            }
            v.iter().map(|x| parse_rational(x).map_err(|e| anyhow!("{e}"))).collect()
        }
    }
}

fn exponents(g: &Global, d: &RootSystemData, s: Vec<Complex64>) -> Result<Vec<Complex64>> {
    if s.len() != d.n_pos() {
        bail!("{} needs {} exponents, got {}", d.name(), d.n_pos(), s.len());
    }
    Ok(if g.classic_order { d.from_classic_order(&s) } else { s })
}

fn fmt_c(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{:.16e}", z.re)
    } else {
        format!("{:.16e} {} {:.16e} i", z.re, if z.im < 0.0 { "-" } else { "+" }, z.im.abs())
    }
}

fn poincare(g: &Global, a: &PoincareArgs) -> Result<Report> {
    if let Some(t) = &a.table {
        if t != "nonvanishing" {
            bail!("unknown table {t:?}; use nonvanishing");
        }
        let rows = nonvanishing_tables();
        let mut text = String::new();
        for r in &rows {
            let class = r.class.as_deref().map(|c| format!(" (-1 on {c})")).unwrap_or_default();
            text += &format!("{:<12} {:<4} / {:<12}{class}: expected {}, computed {}  {}\n", r.case, r.delta, r.delta_i, r.expected, r.computed, if r.pass { "PASS" } else { "FAIL" });
        }
        let pass = rows.iter().all(|r| r.pass);
        return Ok(Report { pass, text, result: serde_json::to_value(&rows)? });
    }
    let name = a.system.as_deref().ok_or_else(|| anyhow!("a root system is required unless --table is given"))?;
    let d = system(name)?;
    let _ = g;
    if let Some(class) = a.mixed {
        let long = class == LengthClass::Long;
        let i_set = match &a.i_set {
            Some(s) => index_set(&d, Some(s))?,
            None => (0..d.rank).filter(|&i| d.positive_roots[d.simple_index(i)].long == long).collect(),
        };
        let m = mixed_eval(&d, &i_set, long).map_err(|e| anyhow!("{e}"))?;
        let mut text = format!(
            "{} I = {:?} (type {}): W^I = {} with -1 on the {} roots\n  Delta_1 = {}, Delta_1 cap Delta_I = {}, |W_J| = {}, |W_{{I cap J}}| = {}{}\n",
            d.name(),
            one_based(&i_set),
            format_type_product(&d.parabolic_type(&i_set)),
            format_rational(&m.value),
            if long { "long" } else { "short" },
            m.delta1,
            m.delta1_i,
            m.w_j_order,
            m.w_ij_order,
            if m.tabulated { "" } else { " (untabulated pair)" }
        );
        let mut enumerated = None;
        if d.enumerable {
            let grp = enumerate_weyl(&d).map_err(|e| anyhow!("{e}"))?;
            let v = mixed_eval_enumerated(&d, &grp, &i_set, long);
            text += &format!("  enumerated: {}\n", format_rational(&v));
            enumerated = Some(format_rational(&v));
        }
        let pass = enumerated.as_ref().is_none_or(|v| *v == format_rational(&m.value));
        return Ok(Report { pass, text, result: json!({ "system": d.name(), "I": one_based(&i_set), "mixed": m, "enumerated": enumerated }) });
    }
    let i_set = index_set(&d, a.i_set.as_deref())?;
    let poly = relative_poly(&d, &i_set).map_err(|e| anyhow!("{e}"))?;
    let minus_one = eval_minus_one(&d, &i_set);
    let mut text = format!("{} I = {:?} (type {})\nW^I(u) = {}\nW^I(-1) = {}\n", d.name(), one_based(&i_set), format_type_product(&d.parabolic_type(&i_set)), poly, format_rational(&minus_one));
    let mut result = json!({
        "system": d.name(),
        "I": one_based(&i_set),
        "delta_I": format_type_product(&d.parabolic_type(&i_set)),
        "poly": poly.to_string(),
        "value_at_minus_one": format_rational(&minus_one),
    });
    if let Some(x) = &a.eval {
        let x = parse_rational(x).map_err(|e| anyhow!("{e}"))?;
        let v = poly.eval(&x);
        text += &format!("W^I({}) = {}\n", format_rational(&x), format_rational(&v));
        result["eval"] = json!({ "at": format_rational(&x), "value": format_rational(&v) });
    }
    if a.split {
        if !d.enumerable || d.is_simply_laced() {
            bail!("--split needs an enumerable system with two root lengths");
        }
        let grp = enumerate_weyl(&d).map_err(|e| anyhow!("{e}"))?;
        let cosets = min_coset_reps(&grp, &i_set);
        let p = generalized_poincare(&d, &grp, &cosets.w_upper_i, true);
        text += &format!("W^I(u_L, u_S) = {}\n", p.to_text());
        result["split"] = json!(p.to_text());
    }
    Ok(Report { pass: true, text, result })
}

fn weyl(a: &WeylArgs) -> Result<Report> {
    let d = system(&a.system)?;
    let i_set = index_set(&d, a.i_set.as_deref())?;
    let g = enumerate_weyl(&d).map_err(|e| anyhow!("{e}"))?;
    let cosets = min_coset_reps(&g, &i_set);
    let mut text = format!("{}: |W| = {}, I = {:?}, |W_I| = {}, |W^I| = {}\nW^I:\n", d.name(), g.len(), one_based(&i_set), cosets.w_i.len(), cosets.w_upper_i.len());
    let labels = |inv: &[usize]| inv.iter().map(|&r| d.root_label(r)).collect::<Vec<_>>();
    for &w in &cosets.w_upper_i {
        text += &format!("  {:<24} length {}  inversions {:?}\n", g.elements[w].word_string(), g.elements[w].length(), labels(g.inversion_set(w)));
    }
    let mut result = json!({ "system": d.name(), "order": g.len(), "cosets": cosets.to_json(&g) });
    if a.elements {
        let all: Vec<Value> = g.elements.iter().map(|e| json!({ "word": e.word_string(), "length": e.length(), "inversions": labels(&e.inversions) })).collect();
        text += "elements:\n";
        for e in &g.elements {
            text += &format!("  {:<24} {:?}\n", e.word_string(), labels(&e.inversions));
        }
        result["elements"] = Value::Array(all);
    }
    if a.roots {
        let dump = d.dump();
        text += &format!("{}\n", serde_json::to_string_pretty(&dump)?);
        result["roots"] = serde_json::to_value(&dump)?;
    }
    Ok(Report { pass: true, text, result })
}

fn lambda_vector(d: &RootSystemData, i_set: &[usize], m: Option<&Vec<i64>>) -> Result<Vec<i64>> {
    let mut lam = vec![0i64; d.rank];
    match m {
        None => {
            for &i in i_set {
                lam[i] = 1;
            }
        }
        Some(m) => {
            if m.len() != i_set.len() {
                bail!("--m needs one entry per element of I ({}), got {}", i_set.len(), m.len());
            }
            for (&i, &v) in i_set.iter().zip(m) {
                lam[i] = v;
            }
        }
    }
    Ok(lam)
}

fn star_k(g: &Global, d: &RootSystemData, ctx: &BernoulliContext, k: &[u32]) -> Result<Vec<u32>> {
    if k.len() != ctx.n_star() {
        bail!("k runs over Delta* ({} roots: {:?}), got {} entries", ctx.n_star(), star_labels(d, ctx), k.len());
    }
    if !g.classic_order {
        return Ok(k.to_vec());
    }
    let order: Vec<usize> = d.classic_order().into_iter().filter(|r| ctx.star_pos(*r).is_some()).collect();
    let mut out = vec![0; k.len()];
    for (v, r) in k.iter().zip(order) {
        out[ctx.star_pos(r).unwrap()] = *v;
    }
    Ok(out)
}

fn star_labels(d: &RootSystemData, ctx: &BernoulliContext) -> Vec<String> {
    ctx.par.delta_star.iter().map(|&r| d.positive_roots[r].form_label()).collect()
}

fn bernoulli(g: &Global, a: &BernoulliArgs) -> Result<Report> {
    let d = system(&a.system)?;
    let i_set = index_set(&d, a.i_set.as_deref())?;
    if a.cross_check {
        return bernoulli_cross_check(&d, &i_set, a);
    }
    let ctx = BernoulliContext::new(&d, &i_set, g.phi_seed).map_err(|e| anyhow!("{e}"))?;
    let y = parse_y(&d, a.y.as_ref())?;
    let lam = lambda_vector(&d, &i_set, a.m.as_ref())?;
    let head = format!("{} I = {:?}, Delta* = {:?}, lambda = {:?}, phi = {:?} ({})\n", d.name(), one_based(&i_set), star_labels(&d, &ctx), lam, ctx.phi.phi.iter().map(format_rational).collect::<Vec<_>>(), ctx.phi.provenance);
    if a.lerch {
        let k = star_k(g, &d, &ctx, a.k.as_deref().ok_or_else(|| anyhow!("--lerch needs --k"))?)?;
        let t = lerch_coeffs(&ctx, &k).map_err(|e| anyhow!("{e}"))?;
        let mut text = head;
        for e in &t.entries {
            text += &format!("  nu = {}, j = {}: b = {}\n", format_rational(&e.nu), e.j, format_rational(&e.b));
        }
        return Ok(Report { pass: true, text, result: serde_json::to_value(&t)? });
    }
    if let Some(kmax) = a.kmax {
        let table = bernoulli_table(&ctx, &lam, &y, kmax).map_err(|e| anyhow!("{e}"))?;
        let mut text = head;
        for e in &table.entries {
            text += &format!("  k = {:?}: {}\n", e.k, e.value);
        }
        return Ok(Report { pass: true, text, result: serde_json::to_value(&table)? });
    }
    let k = star_k(g, &d, &ctx, a.k.as_deref().ok_or_else(|| anyhow!("give --k, --kmax or --cross-check"))?)?;
    let v = expand_p(&ctx, &lam, &y, &k).map_err(|e| anyhow!("{e}"))?;
    let text = format!("{head}P(k = {:?}) = {}\n  ~ {}\n", k, v, fmt_c(v.eval(precision(g))));
    let result = json!({
        "system": d.name(),
        "I": one_based(&i_set),
        "k": k,
        "lambda": lam,
        "y": y.iter().map(format_rational).collect::<Vec<_>>(),
        "phi": ctx.phi,
        "value": v.to_json(),
        "text": v.to_string(),
    });
    Ok(Report { pass: true, text, result })
}

/// expand_P against the closed forms: A_r with I = {2, ..., r}, or C3 with I = {2, 3}.
fn bernoulli_cross_check(d: &RootSystemData, i_set: &[usize], a: &BernoulliArgs) -> Result<Report> {
    let r = d.rank;
    let family = d.ctype.family.letter();
    let mut checked = 0usize;
    let mut failures = Vec::new();
    if family == 'A' && r >= 2 && (i_set.is_empty() || i_set == (1..r).collect::<Vec<_>>()) {
        let i_set: Vec<usize> = (1..r).collect();
        let ctx = BernoulliContext::new(d, &i_set, None).map_err(|e| anyhow!("{e}"))?;
        let pos: Vec<usize> = (1..=r)
            .map(|j| {
                let coords: Vec<i64> = (0..r).map(|i| i64::from(i < j)).collect();
                ctx.star_pos(d.find_root(&coords).unwrap().0).unwrap()
            })
            .collect();
        let y = parse_y(d, a.y.as_ref())?;
        let lams: Vec<Vec<i64>> = match &a.m {
            Some(m) => vec![m.clone()],
            None => vec![vec![1; r - 1], (1..r as i64).collect(), (0..r - 1).map(|i| if i == 0 { 3 } else { 1 }).collect()],
        };
        for kc in indices_up_to(r, a.kmax.unwrap_or(4)) {
            let mut k = vec![0; r];
            for (v, &p) in pos.iter().enumerate() {
                k[p] = kc[v];
            }
            for m in &lams {
                let mut lam = vec![0i64];
                lam.extend(m);
                let e = expand_p(&ctx, &lam, &y, &k).map_err(|e| anyhow!("{e}"))?;
                if e != closed_form_p_ar(&kc, &y, m) {
                    failures.push(format!("k={kc:?} m={m:?}"));
                }
                checked += 1;
            }
        }
    } else if d.name() == "C3" && (i_set.is_empty() || i_set == [1, 2]) {
        let ctx = BernoulliContext::new(d, &[1, 2], None).map_err(|e| anyhow!("{e}"))?;
        let mut k = vec![0; 5];
        for (v, &root) in c3_root_positions(d).iter().enumerate() {
            k[ctx.star_pos(root).unwrap()] = [2, 1, 1, 1, 1][v];
        }
        for (m2, m3) in [(1, 1), (1, 2), (2, 1)] {
            let e = expand_p(&ctx, &[0, m2, m3], &[int(0), int(0), int(0)], &k).map_err(|e| anyhow!("{e}"))?;
            if e != c3_p_21111(m2, m3) {
                failures.push(format!("(m2, m3) = ({m2}, {m3})"));
            }
            checked += 1;
        }
    } else {
        bail!("closed forms exist for A_r with I = {{2..r}} and C3 with I = {{2,3}}");
    }
    let pass = failures.is_empty();
    let text = format!("{}: {checked} exact comparisons, {}\n{}", d.name(), if pass { "PASS" } else { "FAIL" }, failures.iter().map(|f| format!("  differs at {f}\n")).collect::<String>());
    Ok(Report { pass, text, result: json!({ "system": d.name(), "checked": checked, "failures": failures }) })
}

fn sum_text(label: &str, s: &SumResult) -> String {
    if s.terms == 0 {
        return format!("{label} = {} (closed form)\n", fmt_c(s.complex()));
    }
    let mut t = format!(
        "{label} = {}\n  N = {}, terms = {}, |S_N - S_N/2| = {:.3e}, precision = {:?}\n",
        fmt_c(s.complex()),
        s.n,
        s.terms,
        s.cauchy_diff,
        s.precision
    );
    for w in &s.warnings {
        t += &format!("  warning: {w}\n");
    }
    t
}

fn zeta(g: &Global, a: &ZetaArgs) -> Result<Report> {
    let d = system(&a.system)?;
    let s = exponents(g, &d, parse_complexes(&a.s)?)?;
    let y = parse_y(&d, a.y.as_ref())?;
    let prec = precision(g);
    let (label, v) = match &a.i_set {
        Some(i) => {
            let i_set = index_set(&d, Some(i))?;
            let args = SumArgs::new(&d, s, y, i_set.clone()).map_err(|e| anyhow!("{e}"))?;
            (format!("S(s, y; I = {:?}; {})", one_based(&i_set), d.name()), s_direct(&d, &args, a.n, prec).map_err(|e| anyhow!("{e}"))?)
        }
        None => (format!("zeta_{}(s, y; {})", d.rank, d.name()), zeta_r(&d, &s, &y, a.n, prec).map_err(|e| anyhow!("{e}"))?),
    };
    let text = sum_text(&label, &v);
    Ok(Report { pass: true, text, result: serde_json::to_value(&v)? })
}

fn relation_text(r: &RelationReport) -> String {
    let mut t = format!("{} ({}, I = {:?})\n", r.name, r.system, r.i_set);
    t += &sum_text("  lhs", &r.lhs);
    t += &sum_text("  rhs", &r.rhs);
    t += &format!("  |lhs - rhs| = {:.3e}, relative {:.3e}, tolerance {:.1e}\n", r.abs_err, r.rel_err, r.tol);
    for c in &r.checks {
        t += &format!("  check {}: relative {:.3e} {}\n", c.label, c.rel_err, if c.pass { "ok" } else { "FAILED" });
    }
    if let Some(p) = &r.precheck {
        t += &format!("  Poincare pre-check: W^I = {} (enumerated {}), odd classes {:?}{}\n", p.value, p.enumerated, p.odd_classes, if p.lhs_zero_expected { ", LHS expected to vanish" } else { "" });
    }
    if let Some(phi) = &r.phi {
        t += &format!("  phi = {:?} ({})\n", phi.phi.iter().map(format_rational).collect::<Vec<_>>(), phi.provenance);
    }
    for n in &r.notes {
        t += &format!("  note: {n}\n");
    }
    t += if r.pass { "PASS\n" } else { "FAIL\n" };
    t
}

fn relation_report(r: RelationReport) -> Result<Report> {
    Ok(Report { pass: r.pass, text: relation_text(&r), result: serde_json::to_value(&r)? })
}

fn verify_cmd(g: &Global, a: &VerifyArgs) -> Result<Report> {
    let prec = precision(g);
    let s_or = |n: usize, default: f64| -> Result<Vec<Complex64>> {
        match &a.s {
            Some(v) if v.len() == n => parse_complexes(v),
            Some(v) => bail!("--s needs {n} entries, got {}", v.len()),
            None => Ok(vec![Complex64::new(default, 0.0); n]),
        }
    };
    let k_or = |n: usize| -> Result<Vec<u32>> {
        match &a.k {
            Some(v) if v.len() == n => Ok(v.clone()),
            Some(v) => bail!("--k needs {n} entries, got {}", v.len()),
            None => Ok(vec![2; n]),
        }
    };
    let err = |e: weylzeta::Error| anyhow!("{e}");
    if let Some(t) = a.template {
        let rep = match t {
            Template::A2 => {
                let k = k_or(2)?;
                template_a2(k[0], k[1], s_or(1, 2.0)?[0], a.n.unwrap_or(3000), a.tol.unwrap_or(1e-8), prec).map_err(err)?
            }
            Template::A3 => {
                let k = k_or(3)?;
                let s = s_or(3, 2.0)?;
                template_a3([k[0], k[1], k[2]], [s[0], s[1], s[2]], a.n.unwrap_or(80), a.n2.unwrap_or(2000), a.tol.unwrap_or(1e-6), prec).map_err(err)?
            }
            Template::C3 => {
                let s = s_or(4, 2.0)?;
                template_c3([s[0], s[1], s[2], s[3]], a.n.unwrap_or(60), a.m.unwrap_or(100), a.n2.unwrap_or(400), a.tol.unwrap_or(1e-5), prec).map_err(err)?
            }
            Template::C3Values => c3_values(a.n.unwrap_or(300), a.tol.unwrap_or(1e-6), prec).map_err(err)?,
            Template::G2Values => check_g2_values(a.n.unwrap_or(4000), a.tol.unwrap_or(1e-6), prec).map_err(err)?,
        };
        return relation_report(rep);
    }
    if !a.generic {
        bail!("give --template or --generic with --system");
    }
    let d = system(a.system.as_deref().ok_or_else(|| anyhow!("--generic needs --system"))?)?;
    let i_set = index_set(&d, a.i_set.as_deref())?;
    let par = d.parabolic(&i_set).map_err(err)?;
    let k = k_or(par.delta_star.len())?;
    let s = s_or(par.delta_i_plus.len(), 2.0)?;
    let y = parse_y(&d, a.y.as_ref())?;
    let spec = RelationSpec::new(&d, &i_set, k, s, y).map_err(err)?;
    let mode = if a.direct { LhsMode::Direct } else { LhsMode::SignedWeyl };
    let rep = verify(&spec, mode, a.tol.unwrap_or(1e-6), a.n.unwrap_or(1000), a.m.unwrap_or(400), g.phi_seed, prec).map_err(err)?;
    relation_report(rep)
}

fn residue(a: &ResidueArgs) -> Result<Report> {
    let d = system(&a.system)?;
    let i_set = index_set(&d, Some(&a.i_set))?;
    if a.lambda.len() != d.rank {
        bail!("--lambda needs {} entries", d.rank);
    }
    let y = parse_y(&d, a.y.as_ref())?;
    let rep = residue_check(&d, &i_set, &a.lambda, &y, &[], a.seed, a.tol).map_err(|e| anyhow!("{e}"))?;
    let mut text = format!("{} I = {:?}, lambda = {:?}\n  F_I = {}\n", rep.system, rep.i_set, rep.lambda, fmt_c(Complex64::new(rep.direct[0], rep.direct[1])));
    for (order, v) in &rep.residues {
        text += &format!("  residues in order {:?}: {}\n", order, fmt_c(Complex64::new(v[0], v[1])));
    }
    text += &format!("  max |difference| = {:.3e}\n{}\n", rep.max_abs_diff, if rep.pass { "PASS" } else { "FAIL" });
    Ok(Report { pass: rep.pass, text, result: serde_json::to_value(&rep)? })
}

fn lerch(g: &Global, a: &LerchArgs) -> Result<Report> {
    let d = system(&a.system)?;
    if a.i == 0 || a.i > d.rank {
        bail!("--i must lie in 1..={}", d.rank);
    }
    let s = parse_complex(&a.s)?;
    let (rep, table) = lerch_relation_check(&d, a.i - 1, &a.k, s, a.n, a.tol, precision(g)).map_err(|e| anyhow!("{e}"))?;
    let mut text = relation_text(&rep);
    text += "  coefficients b_{k nu j}:\n";
    for e in &table.entries {
        text += &format!("    nu = {}, j = {}: {}\n", format_rational(&e.nu), e.j, format_rational(&e.b));
    }
    Ok(Report { pass: rep.pass, text, result: json!({ "report": rep, "coefficients": table }) })
}
