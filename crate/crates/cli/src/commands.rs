use std::fmt::Write as _;
use std::path::Path;

use anyhow::Context;
use hopf_partial::actions::{
    build_smash, classify_action, group_to_kg, verify_partial_group_action, verify_smash, ActionMap,
};
use hopf_partial::coactions::{
    build_coring, classify_coaction, ClassificationVerdict, CoactionMap,
};
use hopf_partial::duality::{
    action_to_coaction, build_koppinen, coaction_to_action, dual_ring_of_coring, prop410_iso,
    transfer_report,
};
use hopf_partial::exactlin::Field;
use hopf_partial::examples::{
    action_example, coaction_example, ExampleParams, ACTION_EXAMPLES, COACTION_EXAMPLES,
};
use hopf_partial::frobenius::{build_frobenius_system, frobenius_pair};
use hopf_partial::galois::{galois_verdict, morita_context};
use hopf_partial::mapfile::MapFile;
use hopf_partial::presentations::{
    cyclic_group_table, diagonal_algebra, dual_numbers, group_algebra, sweedler4,
    symmetric_group_table, Presentation,
};
use hopf_partial::report::AxiomReport;
use serde_json::{json, Value};

use crate::source::{parse_field, Loaded};
use crate::Outcome;

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("serializable")
}

fn report_text(out: &mut String, r: &AxiomReport) {
    for line in r.to_string().lines() {
        let _ = writeln!(out, "  {line}");
    }
}

/// The action side of a loaded map; coactions go through the duality.
fn as_action(l: &Loaded) -> anyhow::Result<ActionMap> {
    Ok(match l {
        Loaded::Action(a) => a.clone(),
        Loaded::Group(g) => group_to_kg(g)?,
        Loaded::Coaction(c) => coaction_to_action(c)?,
    })
}

fn as_coaction(l: &Loaded) -> anyhow::Result<CoactionMap> {
    Ok(match l {
        Loaded::Coaction(c) => c.clone(),
        Loaded::Action(a) => action_to_coaction(a)?,
        Loaded::Group(g) => action_to_coaction(&group_to_kg(g)?)?,
    })
}

pub fn check(path: &Path, field: Option<&str>) -> anyhow::Result<Outcome> {
    let field = parse_field(field)?;
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let v: Value = serde_json::from_str(&text).map_err(hopf_partial::Error::from)?;
    let is_map = matches!(
        v.get("kind").and_then(Value::as_str),
        Some("coaction" | "action" | "partial-group-action")
    );
    let (kind, file_field, report) = if is_map {
        let base = path.parent().unwrap_or(Path::new(""));
        let m = MapFile::from_json(&v, base)?;
        let report = match &m {
            MapFile::Coaction(c) => {
                let mut r = c.algebra.verify();
                r.extend(c.hopf.verify());
                r
            }
            MapFile::Action(a) => {
                let mut r = a.algebra.verify();
                r.extend(a.hopf.verify());
                r
            }
            MapFile::PartialGroupAction(p) => {
                let mut r = p.algebra.verify();
                r.extend(verify_partial_group_action(p));
                r
            }
        };
        (m.kind().to_string(), m.field(), report)
    } else {
        let p = hopf_partial::presentations::presentation_from_json(&v)?;
        (p.kind().as_str().to_string(), p.field(), p.verify())
    };
    if let Some(f) = field {
        if f != file_field {
            return Err(hopf_partial::Error::FieldMismatch(f, file_field).into());
        }
    }
    let ok = report.all_passed();
    let mut text = format!(
        "{kind} over {file_field}: {}\n",
        if ok { "ok" } else { "FAILED" }
    );
    report_text(&mut text, &report);
    Ok(Outcome {
        ok,
        text,
        result: json!({"presentation": kind, "field": file_field.to_string(), "report": report}),
    })
}

fn flags_line(v: &ClassificationVerdict, global_name: &str) -> String {
    format!(
        "partial: {}, weak: {}, lax: {}, {global_name}: {}",
        yes(v.flags.partial),
        yes(v.flags.weak),
        yes(v.flags.lax),
        yes(v.flags.global)
    )
}

fn verdict_text(out: &mut String, v: &ClassificationVerdict, global_name: &str) {
    let _ = writeln!(out, "{}", flags_line(v, global_name));
    for c in &v.report.checks {
        let _ = write!(out, "  {:<6} {}", c.id, yes(c.passed));
        if let Some(w) = &c.witness {
            let _ = write!(out, "  witness {w}");
        }
        out.push('\n');
    }
}

pub fn classify(l: &Loaded) -> anyhow::Result<Outcome> {
    let mut text = String::new();
    let result = match l {
        Loaded::Coaction(c) => {
            let v = classify_coaction(c)?;
            verdict_text(&mut text, &v, "comodule");
            json!({"map": "coaction", "verdict": v})
        }
        Loaded::Action(a) => {
            let v = classify_action(a)?;
            verdict_text(&mut text, &v, "module");
            json!({"map": "action", "verdict": v})
        }
        Loaded::Group(g) => {
            let axioms = verify_partial_group_action(g);
            let _ = writeln!(text, "partial group action axioms:");
            report_text(&mut text, &axioms);
            let v = classify_action(&group_to_kg(g)?)?;
            let _ = writeln!(text, "as an action of kG:");
            verdict_text(&mut text, &v, "module");
            json!({"map": "partial-group-action", "axioms": axioms, "verdict": v})
        }
    };
    Ok(Outcome {
        ok: true,
        text,
        result,
    })
}

pub fn dualize(l: &Loaded) -> anyhow::Result<Outcome> {
    let c = as_coaction(l)?;
    let t = transfer_report(&c)?;
    let mut text = format!(
        "coaction: {}\naction:   {}\nround trip: {}, lax/partial preserved: {}, dual basis identity: {}\n",
        flags_summary(&t.coaction),
        flags_summary(&t.action),
        yes(t.round_trip),
        yes(t.preserved),
        yes(t.dual_basis.passed),
    );
    let mut ok = t.round_trip && t.preserved && t.dual_basis.passed;
    let mut result = json!({"transfer": t});
    if t.coaction.lax || t.coaction.weak {
        let ring = dual_ring_of_coring(&build_coring(&c)?)?.summary();
        let _ = writeln!(
            text,
            "dual ring: dim {}, 1_A·*C dim {}, *(C1_A) dim {}, coring underline dim {}",
            ring.dim, ring.underline_dim, ring.dual_of_underline_dim, ring.coring_underline_dim
        );
        report_text(&mut text, &ring.report);
        result["dual_ring"] = to_value(&ring);
    }
    if t.coaction.lax {
        let iso = prop410_iso(&c)?;
        let _ = writeln!(text, "smash isomorphism A^op#H*cop -> #(H,A)^op:");
        report_text(&mut text, &iso.report);
        ok &= iso.report.all_passed();
        result["smash_isomorphism"] = to_value(&iso.report);
    }
    Ok(Outcome { ok, text, result })
}

fn flags_summary(f: &hopf_partial::coactions::Flags) -> String {
    format!(
        "global {}, weak {}, lax {}, partial {}",
        yes(f.global),
        yes(f.weak),
        yes(f.lax),
        yes(f.partial)
    )
}

pub fn smash(l: &Loaded) -> anyhow::Result<Outcome> {
    let a = as_action(l)?;
    let s = build_smash(&a)?;
    let report = verify_smash(&s)?;
    let ok = report.all_passed();
    let mut text = format!(
        "A#H dim {}, (A#H)1_A dim {}, unital: {}\n",
        s.product.dim,
        s.underline.dim(),
        yes(s.underline_algebra.is_some())
    );
    report_text(&mut text, &report);
    Ok(Outcome {
        ok,
        text,
        result: json!({"dim": s.product.dim, "underline_dim": s.underline.dim(), "report": report}),
    })
}

pub fn koppinen(l: &Loaded) -> anyhow::Result<Outcome> {
    let c = as_coaction(l)?;
    let k = build_koppinen(&c)?.summary();
    let mut text = format!(
        "#(H,A) dim {}, underline dim {}, unital: {}\n",
        k.dim,
        k.underline_dim,
        yes(k.underline_unital)
    );
    report_text(&mut text, &k.report);
    Ok(Outcome {
        ok: k.report.all_passed(),
        text,
        result: to_value(&k),
    })
}

pub fn frobenius(l: &Loaded) -> anyhow::Result<Outcome> {
    let a = as_action(l)?;
    let fd = frobenius_pair(&a.hopf)?;
    let sys = build_frobenius_system(&a, &fd)?;
    let s = sys.summary();
    let ok = fd.report.all_passed() && s.identities.all_passed();
    let mut text = format!(
        "integrals: {} in H, {} in H*; <φ,t> before normalising: {}\n",
        s.integrals[0], s.integrals[1], s.raw_pairing
    );
    let _ = writeln!(text, "Frobenius pair:");
    report_text(&mut text, &fd.report);
    let _ = writeln!(
        text,
        "Frobenius system on (A#H)1_A (dim {}):",
        s.underline_dim
    );
    report_text(&mut text, &s.identities);
    Ok(Outcome {
        ok,
        text,
        result: json!({"pair": fd.report, "system": s}),
    })
}

pub fn galois(l: &Loaded) -> anyhow::Result<Outcome> {
    let c = as_coaction(l)?;
    let g = galois_verdict(&c)?;
    let text = format!(
        "T dim {}, can rank {} ({} -> {}), theta rank {} ({} -> {}), Q dim {}\n{}\n",
        g.t_dim,
        g.can.rank,
        g.can.domain_dim,
        g.can.codomain_dim,
        g.theta.rank,
        g.theta.domain_dim,
        g.theta.codomain_dim,
        g.morita.q_dim,
        g.verdict_line()
    );
    Ok(Outcome {
        ok: true,
        text,
        result: to_value(&g),
    })
}

pub fn morita(l: &Loaded) -> anyhow::Result<Outcome> {
    let c = as_coaction(l)?;
    let m = morita_context(&c)?;
    let s = m.summary();
    let mut text = format!(
        "T dim {}, ring dim {}, Q dim {}\ntau surjective: {}, mu surjective: {}, strict: {}\n",
        s.t_dim,
        s.ring_dim,
        s.q_dim,
        yes(s.tau_surjective),
        yes(s.mu_surjective),
        yes(s.strict)
    );
    if let Some(b) = s.q_matches_a {
        let _ = writeln!(text, "dim Q = dim A: {}", yes(b));
    }
    report_text(&mut text, &s.report);
    Ok(Outcome {
        ok: s.report.all_passed(),
        text,
        result: to_value(&s),
    })
}

const DESCRIPTIONS: [(&str, &str); 14] = [
    (
        "sweedler-on-k",
        "Sweedler's H4 on k through e_α = ½ + ½c + αcx (--alpha)",
    ),
    (
        "sweedler-on-dual-numbers",
        "H4 on k[x]/(x²) by b ↦ b ⊗ e_{1/2}",
    ),
    ("trivial", "a ↦ a ⊗ 1 on k^dim over kZ2 (--dim)"),
    ("weak-zero", "the zero coaction of kZ2 on k"),
    ("regular-z2", "kZ2 coacting on itself by Δ"),
    ("regular-z3", "kZ3 coacting on itself by Δ"),
    ("z2-integral-on-k", "kZ2 on k through ½(1+g)"),
    (
        "partial-z2-on-k2",
        "Z2 swapping points 1 and 2 of {0,1,2}, restricted to {0,1}",
    ),
    (
        "partial-z3-on-k2",
        "rotation of 3 points restricted to {0,1}",
    ),
    ("global-z2-swap", "Z2 swapping the factors of k²"),
    (
        "partial-s3",
        "S3 on 3 points restricted to a 2-point subset",
    ),
    (
        "noncentral-t2",
        "Z2 on upper triangular 2x2 with non-central g·1",
    ),
    ("trivial-action", "h·a = ϵ(h)a on k^dim over kZ2 (--dim)"),
    ("weak-zero-action", "the zero action of kZ2 on k"),
];

fn describe(name: &str) -> &'static str {
    DESCRIPTIONS
        .iter()
        .find(|(n, _)| *n == name)
        .map_or("", |(_, d)| d)
}

pub fn examples_list() -> Outcome {
    let mut text = String::new();
    let mut items = Vec::new();
    for (kind, names) in [
        ("coaction", &COACTION_EXAMPLES[..]),
        ("action", &ACTION_EXAMPLES[..]),
    ] {
        for name in names {
            let _ = writeln!(text, "{name:<26} {kind:<9} {}", describe(name));
            items.push(json!({"name": name, "map": kind, "description": describe(name)}));
        }
    }
    Outcome {
        ok: true,
        text,
        result: Value::Array(items),
    }
}

pub fn examples_export(dir: &Path, field: Option<&str>) -> anyhow::Result<Outcome> {
    let f = parse_field(field)?.unwrap_or(Field::Rational);
    std::fs::create_dir_all(dir).map_err(hopf_partial::Error::from)?;
    let mut written = Vec::new();
    let mut presentations = vec![
        ("sweedler4.json", Presentation::Hopf(sweedler4(f)?)),
        (
            "z2-group-algebra.json",
            Presentation::Hopf(group_algebra(cyclic_group_table(2), f)?),
        ),
        (
            "z3-group-algebra.json",
            Presentation::Hopf(group_algebra(cyclic_group_table(3), f)?),
        ),
        ("dual-numbers.json", Presentation::Algebra(dual_numbers(f))),
        ("k2.json", Presentation::Algebra(diagonal_algebra(f, 2))),
    ];
    if let Ok(s3) = group_algebra(symmetric_group_table(), f) {
        presentations.push(("s3-group-algebra.json", Presentation::Hopf(s3)));
    }
    for (name, p) in presentations {
        p.save(dir.join(name))?;
        written.push(name.to_string());
    }
    let p = ExampleParams::new(f);
    for name in COACTION_EXAMPLES {
        if let Ok(c) = coaction_example(name, f, &p) {
            let file = format!("{name}.map.json");
            MapFile::Coaction(c).save(dir.join(&file))?;
            written.push(file);
        }
    }
    for name in ACTION_EXAMPLES {
        if let Ok(a) = action_example(name, f, &p) {
            let file = format!("{name}.map.json");
            MapFile::Action(a).save(dir.join(&file))?;
            written.push(file);
        }
    }
    let text = written
        .iter()
        .map(|w| format!("{}\n", dir.join(w).display()))
        .collect();
    Ok(Outcome {
        ok: true,
        text,
        result: json!(written),
    })
}
