//! Canonical text for category files; `parse_file(&print_file(f)) == f`.

use num_traits::{One, Signed};

use crate::ast::*;

fn factor(f: &Factor) -> String {
    match f {
        Factor::Path(labels) => labels.join("*"),
        Factor::Identity(None) => "id".into(),
        Factor::Identity(Some(v)) => format!("id({v})"),
    }
}

fn term_body(t: &Term) -> String {
    let c = t.coeff.abs();
    if c.is_one() {
        factor(&t.factor)
    } else {
        format!("{c}*{}", factor(&t.factor))
    }
}

pub fn print_expr(e: &Expr) -> String {
    let mut out = String::new();
    for (i, t) in e.terms.iter().enumerate() {
        let neg = t.coeff.is_negative();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&term_body(t));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn print_matrix(rows: &[Vec<Expr>]) -> String {
    let rows: Vec<String> = rows
        .iter()
        .map(|r| format!("[{}]", r.iter().map(print_expr).collect::<Vec<_>>().join(", ")))
        .collect();
    format!("[{}]", rows.join(", "))
}

fn tuple(t: &[String]) -> String {
    format!("({})", t.join(", "))
}

pub fn print_category(c: &CategorySpec) -> String {
    let mut out = format!("category {} {{\n  objects {};\n", c.name, c.objects.join(" "));
    if !c.arrows.is_empty() {
        out.push_str("  arrows\n");
        for a in &c.arrows {
            out.push_str(&format!("    {}: {} -> {};\n", a.label, a.source, a.target));
        }
    }
    if !c.relations.is_empty() {
        out.push_str("  relations\n");
        for r in &c.relations {
            out.push_str(&format!("    {} = {};\n", print_expr(&r.lhs), print_expr(&r.rhs)));
        }
    }
    out.push_str("}\n");
    out
}

pub fn print_decl(d: &Decl) -> String {
    match d {
        Decl::Let {
            name,
            source,
            target,
            rows,
            ..
        } => format!(
            "let {name} : {} -> {} = {};",
            tuple(source),
            tuple(target),
            print_matrix(rows)
        ),
        Decl::Object { name, def, .. } => match def {
            ObjectDef::Emb(t) => format!("object {name} = emb{};", tuple(t)),
            ObjectDef::Pair { rel, corel } => format!("object {name} = ({rel} | {corel});"),
        },
        Decl::Morphism {
            name,
            source,
            target,
            datum,
            ..
        } => {
            let d = match datum {
                MatRef::Named(n) => n.clone(),
                MatRef::Literal(rows) => print_matrix(rows),
            };
            format!("morphism {name} : {source} -> {target} = {d};")
        }
    }
}

pub fn print_file(f: &SpecFile) -> String {
    let mut out = print_category(&f.category);
    for d in &f.decls {
        out.push_str(&print_decl(d));
        out.push('\n');
    }
    out
}
