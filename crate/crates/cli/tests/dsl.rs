use num_bigint::BigInt;
use proptest::prelude::*;

use freeabel::Error;
use freeabel_cli::ast::*;
use freeabel_cli::error::{CliError, Pos};
use freeabel_cli::parser::{parse_category, parse_file};
use freeabel_cli::printer::print_file;
use freeabel_cli::session::Session;

fn name() -> impl Strategy<Value = String> {
    "[a-z][a-z0-9_]{0,5}".prop_filter("keyword", |s| {
        !["category", "objects", "arrows", "relations", "let", "object", "morphism", "emb", "id"]
            .contains(&s.as_str())
    })
}

fn factor() -> impl Strategy<Value = Factor> {
    prop_oneof![
        prop::collection::vec(name(), 1..4).prop_map(Factor::Path),
        Just(Factor::Identity(None)),
        name().prop_map(|v| Factor::Identity(Some(v))),
    ]
}

fn expr() -> impl Strategy<Value = Expr> {
    prop::collection::vec(
        (-1000i64..=1000, factor()).prop_map(|(c, factor)| Term {
            coeff: BigInt::from(c),
            factor,
        }),
        0..4,
    )
    .prop_map(|terms| Expr {
        terms,
        pos: Pos::default(),
    })
}

fn matrix() -> impl Strategy<Value = Vec<Vec<Expr>>> {
    (0usize..3, 0usize..3).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(expr(), c), r))
}

fn decl() -> impl Strategy<Value = Decl> {
    let p = Pos::default();
    prop_oneof![
        (name(), prop::collection::vec(name(), 0..3), prop::collection::vec(name(), 0..3), matrix()).prop_map(
            move |(name, source, target, rows)| Decl::Let {
                name,
                source,
                target,
                rows,
                pos: p
            }
        ),
        (name(), prop::collection::vec(name(), 0..3)).prop_map(move |(name, t)| Decl::Object {
            name,
            def: ObjectDef::Emb(t),
            pos: p
        }),
        (name(), name(), name()).prop_map(move |(name, rel, corel)| Decl::Object {
            name,
            def: ObjectDef::Pair { rel, corel },
            pos: p
        }),
        (name(), name(), name(), prop_oneof![name().prop_map(MatRef::Named), matrix().prop_map(MatRef::Literal)])
            .prop_map(move |(name, source, target, datum)| Decl::Morphism {
                name,
                source,
                target,
                datum,
                pos: p
            }),
    ]
}

fn spec_file() -> impl Strategy<Value = SpecFile> {
    let p = Pos::default();
    (
        name(),
        prop::collection::vec(name(), 1..5),
        prop::collection::vec((name(), name(), name()), 0..4),
        prop::collection::vec((expr(), expr()), 0..3),
        prop::collection::vec(decl(), 0..4),
    )
        .prop_map(move |(name, objects, arrows, relations, decls)| SpecFile {
            category: CategorySpec {
                name,
                objects,
                arrows: arrows
                    .into_iter()
                    .map(|(label, source, target)| ArrowSpec {
                        label,
                        source,
                        target,
                        pos: p,
                    })
                    .collect(),
                relations: relations
                    .into_iter()
                    .map(|(lhs, rhs)| RelationSpec { lhs, rhs, pos: p })
                    .collect(),
                pos: p,
            },
            decls,
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn parse_print_round_trip(f in spec_file()) {
        let text = print_file(&f);
        let back = parse_file(&text).map_err(|e| TestCaseError::fail(format!("{e}\n{text}")))?;
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(print_file(&back), text);
    }
}

#[test]
fn whitespace_insensitive() {
    let a = parse_category("category S { objects a b c d; arrows alpha: a->b; beta: b->c; gamma: c->d; relations alpha*beta*gamma = 0; }").unwrap();
    let b = parse_category("category S{objects a b c d;arrows alpha:a->b;beta:b->c;gamma:c->d;relations alpha * beta * gamma;}").unwrap();
    assert_eq!(a, b);
}

#[test]
fn non_parallel_relation_is_rejected() {
    let err = Session::parse("category S { objects a b c; arrows alpha: a -> b; beta: b -> c; relations alpha = beta; }")
        .unwrap_err();
    assert!(matches!(err, CliError::Semantic { source: Error::NonParallelRelation(_), .. }), "{err}");
}

#[test]
fn empty_relations_block_is_free() {
    let s = Session::parse("category F { objects a b c; arrows x: a -> b; y: b -> c; relations }").unwrap();
    assert!(s.cat().relations().is_empty());
    assert_eq!(s.cat().hom(0, 2).dim(), 1);
}

#[test]
fn cyclic_quiver_is_rejected() {
    let err = Session::parse("category C {\n objects a b;\n arrows x: a -> b; y: b -> a;\n}").unwrap_err();
    assert!(matches!(err, CliError::Semantic { source: Error::Cyclic(_), .. }), "{err}");
}
