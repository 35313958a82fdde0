//! Morphism expressions.
//!
//! ```text
//! expr   := term { "." term }
//! term   := factor { "ox" factor }
//! factor := IDENT | "id[" OBJ "]" | "c[" OBJ "," OBJ "]" | "cinv[" OBJ "," OBJ "]" | "(" expr ")"
//! ```
//!
//! `f . g` is `f∘g` (`g` applied first); `∘` and `⊗` are accepted for `.` and
//! `ox`. Objects are `H`, `Hstar` and `K`.

use std::fmt;

use hopfbrace::bracelab::{alpha_of, beta_closed_form, Structure};
use hopfbrace::tensorcat::{braiding, braiding_inverse, coevaluation, evaluation, Mor, Obj};

use crate::error::{CliError, Pos};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Atom {
    H,
    Hstar,
}

/// An object as a tensor word in `H` and `H*`; empty is `K`.
pub type Ty = Vec<Atom>;

fn parse_obj(name: &str) -> Option<Ty> {
    match name {
        "H" => Some(vec![Atom::H]),
        "Hstar" => Some(vec![Atom::Hstar]),
        "K" => Some(vec![]),
        _ => None,
    }
}

fn obj_name(t: &Ty) -> &'static str {
    match t.as_slice() {
        [] => "K",
        [Atom::H] => "H",
        _ => "Hstar",
    }
}

pub fn show_ty(t: &Ty) -> String {
    if t.is_empty() {
        return "K".into();
    }
    let parts: Vec<&str> = t
        .iter()
        .map(|a| match a {
            Atom::H => "H",
            Atom::Hstar => "H*",
        })
        .collect();
    parts.join("⊗")
}

#[derive(Debug, Clone)]
pub struct Expr {
    pub node: Node,
    pub pos: Pos,
}

/// Structural equality; positions are ignored.
impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.node == other.node
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Node {
    Gen(String),
    Id(Ty),
    Braid { inverse: bool, left: Ty, right: Ty },
    /// `items[0] ∘ items[1] ∘ …`
    Compose(Vec<Expr>),
    Tensor(Vec<Expr>),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Dot,
    Ox,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Dot => "`.`".into(),
        Tok::Ox => "`ox`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::LBracket => "`[`".into(),
        Tok::RBracket => "`]`".into(),
        Tok::Comma => "`,`".into(),
        Tok::End => "end of input".into(),
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, Pos)>, CliError> {
    let mut out = Vec::new();
    let mut pos = Pos { line: 1, col: 1 };
    let mut chars = src.chars().peekable();
    while let Some(&ch) = chars.peek() {
        let here = pos;
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars<'_>>| {
            let c = chars.next().expect("peeked");
            if c == '\n' {
                pos.line += 1;
                pos.col = 1;
            } else {
                pos.col += 1;
            }
        };
        let single = match ch {
            '.' | '∘' => Some(Tok::Dot),
            '⊗' => Some(Tok::Ox),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(t) = single {
            bump(&mut chars);
            out.push((t, here));
        } else if ch.is_whitespace() {
            bump(&mut chars);
        } else if ch.is_ascii_alphabetic() || ch == '_' {
            let mut word = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    word.push(c);
                    bump(&mut chars);
                } else {
                    break;
                }
            }
            let tok = if word == "ox" { Tok::Ox } else { Tok::Ident(word) };
            out.push((tok, here));
        } else {
            return Err(CliError::Syntax { pos: here, msg: format!("unexpected character `{ch}`") });
        }
    }
    out.push((Tok::End, pos));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }
    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }
    fn next(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }
    fn fail<T>(&self, msg: impl Into<String>) -> Result<T, CliError> {
        Err(CliError::Syntax { pos: self.pos(), msg: msg.into() })
    }
    fn expect(&mut self, t: Tok) -> Result<(), CliError> {
        if *self.peek() == t {
            self.next();
            Ok(())
        } else {
            self.fail(format!("expected {}, found {}", describe(&t), describe(self.peek())))
        }
    }

    fn expr(&mut self) -> Result<Expr, CliError> {
        let first = self.term()?;
        let pos = first.pos;
        let mut items = vec![first];
        while *self.peek() == Tok::Dot {
            self.next();
            items.push(self.term()?);
        }
        Ok(if items.len() == 1 { items.pop().expect("one") } else { Expr { node: Node::Compose(items), pos } })
    }

    fn term(&mut self) -> Result<Expr, CliError> {
        let first = self.factor()?;
        let pos = first.pos;
        let mut items = vec![first];
        while *self.peek() == Tok::Ox {
            self.next();
            items.push(self.factor()?);
        }
        Ok(if items.len() == 1 { items.pop().expect("one") } else { Expr { node: Node::Tensor(items), pos } })
    }

    fn obj(&mut self) -> Result<Ty, CliError> {
        match self.peek().clone() {
            Tok::Ident(name) => match parse_obj(&name) {
                Some(t) => {
                    self.next();
                    Ok(t)
                }
                None => self.fail(format!("unknown object `{name}`; expected H, Hstar or K")),
            },
            other => self.fail(format!("expected an object, found {}", describe(&other))),
        }
    }

    fn factor(&mut self) -> Result<Expr, CliError> {
        let pos = self.pos();
        match self.next().0 {
            Tok::LParen => {
                let mut inner = self.expr()?;
                self.expect(Tok::RParen)?;
                inner.pos = pos;
                Ok(inner)
            }
            Tok::Ident(name) if *self.peek() == Tok::LBracket && matches!(name.as_str(), "id" | "c" | "cinv") => {
                self.next();
                let left = self.obj()?;
                let node = if name == "id" {
                    Node::Id(left)
                } else {
                    self.expect(Tok::Comma)?;
                    let right = self.obj()?;
                    Node::Braid { inverse: name == "cinv", left, right }
                };
                self.expect(Tok::RBracket)?;
                Ok(Expr { node, pos })
            }
            Tok::Ident(name) => Ok(Expr { node: Node::Gen(name), pos }),
            other => Err(CliError::Syntax { pos, msg: format!("expected a morphism, found {}", describe(&other)) }),
        }
    }
}

pub fn parse_expr(src: &str) -> Result<Expr, CliError> {
    let mut p = Parser { toks: lex(src)?, at: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.fail(format!("unexpected {}", describe(p.peek())));
    }
    Ok(e)
}

/// Canonical text: `" . "` and `" ox "` separators, with every nested
/// composite parenthesized.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.node {
            Node::Gen(n) => f.write_str(n),
            Node::Id(t) => write!(f, "id[{}]", obj_name(t)),
            Node::Braid { inverse, left, right } => {
                write!(f, "{}[{},{}]", if *inverse { "cinv" } else { "c" }, obj_name(left), obj_name(right))
            }
            Node::Compose(items) | Node::Tensor(items) => {
                let outer_tensor = matches!(self.node, Node::Tensor(_));
                let sep = if outer_tensor { " ox " } else { " . " };
                for (i, e) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(sep)?;
                    }
                    let wrap = matches!(e.node, Node::Compose(_) | Node::Tensor(_));
                    if wrap {
                        write!(f, "({e})")?;
                    } else {
                        write!(f, "{e}")?;
                    }
                }
                Ok(())
            }
        }
    }
}

/// A generator's value and its type as a tensor word.
#[derive(Debug, Clone)]
pub struct Binding {
    pub dom: Ty,
    pub cod: Ty,
    pub mor: Mor,
}

/// Generator names bound by a structure of the given kind.
pub fn generator_names(kind: &str) -> Vec<&'static str> {
    let mut names = vec!["aH", "bH", "eta", "eps", "delta"];
    match kind {
        "hopf_brace" => names.extend(["mu1", "mu2", "lambda1", "lambda2", "Gamma"]),
        "brace_triple" => names.extend(["mu", "lambda", "gamma", "T", "alphaH", "betaH"]),
        "post_hopf" => names.extend(["mu", "lambda", "m", "alphaH", "betaH"]),
        _ => names.extend(["mu", "lambda"]),
    }
    names
}

/// The generators of a loaded structure.
pub struct Env<'a> {
    s: &'a Structure,
}

impl<'a> Env<'a> {
    pub fn new(s: &'a Structure) -> Self {
        Env { s }
    }

    fn obj(&self, t: &Ty) -> Obj {
        let h = self.s.hopf().carrier();
        t.iter()
            .map(|a| match a {
                Atom::H => h.clone(),
                Atom::Hstar => h.dual(),
            })
            .reduce(|x, y| x.tensor(&y))
            .unwrap_or_else(Obj::unit)
    }

    fn lookup(&self, name: &str) -> Option<Result<Binding, CliError>> {
        use Atom::{Hstar, H};
        if !generator_names(self.s.kind()).contains(&name) {
            return None;
        }
        let h = self.s.hopf();
        let bind = |dom: Ty, cod: Ty, mor: Mor| Some(Ok(Binding { dom, cod, mor }));
        let hh = || vec![H, H];
        match (name, self.s) {
            ("aH", _) => bind(vec![], vec![Hstar, H], coevaluation(h.carrier())),
            ("bH", _) => bind(vec![H, Hstar], vec![], evaluation(h.carrier())),
            ("eta", _) => bind(vec![], vec![H], h.unit().clone()),
            ("eps", _) => bind(vec![H], vec![], h.counit().clone()),
            ("delta", _) => bind(vec![H], hh(), h.comul().clone()),
            ("mu" | "mu1", _) => bind(hh(), vec![H], h.mul().clone()),
            ("lambda" | "lambda1", _) => bind(vec![H], vec![H], h.antipode().clone()),
            ("mu2", Structure::HopfBrace(b)) => bind(hh(), vec![H], b.second().mul().clone()),
            ("lambda2", Structure::HopfBrace(b)) => bind(vec![H], vec![H], b.second().antipode().clone()),
            ("Gamma", Structure::HopfBrace(b)) => bind(hh(), vec![H], b.gamma()),
            ("gamma", Structure::BraceTriple(t)) => bind(hh(), vec![H], t.gamma().clone()),
            ("T", Structure::BraceTriple(t)) => bind(vec![H], vec![H], t.t().clone()),
            ("alphaH", Structure::BraceTriple(t)) => bind(vec![H], vec![Hstar, H], alpha_of(h, t.gamma())),
            ("betaH", Structure::BraceTriple(t)) => {
                Some(beta_closed_form(t).map_err(CliError::from).map(|mor| Binding { dom: vec![H], cod: vec![Hstar, H], mor }))
            }
            ("m", Structure::PostHopf(p)) => bind(hh(), vec![H], p.m().clone()),
            ("alphaH", Structure::PostHopf(p)) => bind(vec![H], vec![Hstar, H], p.alpha()),
            ("betaH", Structure::PostHopf(p)) => {
                Some(p.beta().map_err(CliError::from).map(|mor| Binding { dom: vec![H], cod: vec![Hstar, H], mor: mor.clone() }))
            }
            _ => None,
        }
    }

    /// Domain and codomain of `e`, without building any matrix.
    pub fn typecheck(&self, e: &Expr) -> Result<(Ty, Ty), CliError> {
        match &e.node {
            Node::Gen(name) => {
                if !generator_names(self.s.kind()).contains(&name.as_str()) {
                    return Err(CliError::UnknownGenerator { pos: e.pos, name: name.clone(), kind: self.s.kind().into() });
                }
                let (dom, cod) = generator_type(name);
                Ok((dom, cod))
            }
            Node::Id(t) => Ok((t.clone(), t.clone())),
            Node::Braid { left, right, .. } => {
                Ok(([left.clone(), right.clone()].concat(), [right.clone(), left.clone()].concat()))
            }
            Node::Tensor(items) => {
                let mut dom = Ty::new();
                let mut cod = Ty::new();
                for it in items {
                    let (d, c) = self.typecheck(it)?;
                    dom.extend(d);
                    cod.extend(c);
                }
                Ok((dom, cod))
            }
            Node::Compose(items) => {
                let (mut dom, cod) = self.typecheck(&items[0])?;
                for it in &items[1..] {
                    let (d, c) = self.typecheck(it)?;
                    if c != dom {
                        return Err(CliError::TypeMismatch { pos: it.pos, expected: show_ty(&dom), found: show_ty(&c) });
                    }
                    dom = d;
                }
                Ok((dom, cod))
            }
        }
    }

    /// Typechecks, then evaluates.
    pub fn eval(&self, e: &Expr) -> Result<Binding, CliError> {
        let (dom, cod) = self.typecheck(e)?;
        let mor = self.eval_checked(e)?;
        Ok(Binding { dom, cod, mor })
    }

    fn eval_checked(&self, e: &Expr) -> Result<Mor, CliError> {
        let kind = self.s.hopf().braid();
        Ok(match &e.node {
            Node::Gen(name) => self.lookup(name).expect("typechecked")?.mor,
            Node::Id(t) => Mor::identity(&self.obj(t)),
            Node::Braid { inverse, left, right } => {
                let (x, y) = (self.obj(left), self.obj(right));
                if *inverse {
                    braiding_inverse(kind, &x, &y)?
                } else {
                    braiding(kind, &x, &y)?
                }
            }
            Node::Tensor(items) => {
                let mut acc = self.eval_checked(&items[0])?;
                for it in &items[1..] {
                    acc = acc.ox(&self.eval_checked(it)?);
                }
                acc
            }
            Node::Compose(items) => {
                let mut acc = self.eval_checked(&items[items.len() - 1])?;
                for it in items[..items.len() - 1].iter().rev() {
                    acc = self.eval_checked(it)?.after(&acc);
                }
                acc
            }
        })
    }
}

fn generator_type(name: &str) -> (Ty, Ty) {
    use Atom::{Hstar, H};
    match name {
        "aH" => (vec![], vec![Hstar, H]),
        "bH" => (vec![H, Hstar], vec![]),
        "eta" => (vec![], vec![H]),
        "eps" => (vec![H], vec![]),
        "delta" => (vec![H], vec![H, H]),
        "mu" | "mu1" | "mu2" | "Gamma" | "gamma" | "m" => (vec![H, H], vec![H]),
        "alphaH" | "betaH" => (vec![H], vec![Hstar, H]),
        _ => (vec![H], vec![H]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hopfbrace::exhibits::{group_algebra, trivial_post_hopf, trivial_triple, FiniteGroup};
    use hopfbrace::tensorcat::BraidingKind;
    use proptest::prelude::*;

    fn c2() -> Structure {
        Structure::Hopf(group_algebra(&FiniteGroup::cyclic(2), BraidingKind::Flip).unwrap())
    }

    #[test]
    fn parses_three_fold_composition() {
        let e = parse_expr("mu . (id[H] ox gamma) . (delta ox id[H])").unwrap();
        match e.node {
            Node::Compose(items) => {
                assert_eq!(items.len(), 3);
                assert!(matches!(items[1].node, Node::Tensor(_)));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unicode_aliases() {
        assert!(parse_expr("μ").is_err());
        assert_eq!(parse_expr("mu ∘ (lambda ⊗ id[H])").unwrap(), parse_expr("mu . (lambda ox id[H])").unwrap());
    }

    #[test]
    fn trailing_dot_is_a_syntax_error() {
        match parse_expr("mu .") {
            Err(CliError::Syntax { pos, .. }) => assert_eq!(pos, Pos { line: 1, col: 5 }),
            other => panic!("{other:?}"),
        }
        match parse_expr("mu\n  . (eta") {
            Err(CliError::Syntax { pos, .. }) => assert_eq!(pos.line, 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unknown_object_rejected() {
        assert!(matches!(parse_expr("id[X]"), Err(CliError::Syntax { .. })));
    }

    #[test]
    fn antipode_identity_via_dsl() {
        let s = c2();
        let env = Env::new(&s);
        let got = env.eval(&parse_expr("mu . (id[H] ox lambda) . delta").unwrap()).unwrap();
        assert_eq!(got.mor, s.hopf().unit_counit());
    }

    #[test]
    fn braid_squared_is_identity() {
        let s = c2();
        let env = Env::new(&s);
        let got = env.eval(&parse_expr("c[H,H] . c[H,H]").unwrap()).unwrap();
        let hh = s.hopf().carrier().tensor(s.hopf().carrier());
        assert_eq!(got.mor, Mor::identity(&hh));
    }

    #[test]
    fn triple_and_post_generators() {
        let h = group_algebra(&FiniteGroup::symmetric3(), BraidingKind::Flip).unwrap();
        let t = Structure::BraceTriple(trivial_triple(&h));
        let got = Env::new(&t).eval(&parse_expr("gamma . (eta ox id[H])").unwrap()).unwrap();
        assert_eq!(got.mor, h.id());
        let p = Structure::PostHopf(trivial_post_hopf(&h));
        let got = Env::new(&p).eval(&parse_expr("m . (id[H] ox eta)").unwrap()).unwrap();
        assert_eq!(got.mor, h.counit().ox(h.unit()));
        // (b⊗H)∘(H⊗α)∘c = m
        let got = Env::new(&p).eval(&parse_expr("(bH ox id[H]) . (id[H] ox alphaH) . c[H,H]").unwrap()).unwrap();
        assert_eq!(&got.mor, trivial_post_hopf(&h).m());
    }

    #[test]
    fn type_errors_carry_positions() {
        let s = c2();
        let env = Env::new(&s);
        match env.typecheck(&parse_expr("mu . eps").unwrap()) {
            Err(CliError::TypeMismatch { pos, expected, found }) => {
                assert_eq!(pos, Pos { line: 1, col: 6 });
                assert_eq!((expected.as_str(), found.as_str()), ("H⊗H", "K"));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(env.typecheck(&parse_expr("gamma").unwrap()), Err(CliError::UnknownGenerator { .. })));
    }

    fn arb_expr() -> impl Strategy<Value = Expr> {
        let pos = Pos::default();
        let leaf = prop_oneof![
            prop::sample::select(vec!["mu", "eta", "delta", "lambda", "eps"])
                .prop_map(move |n| Expr { node: Node::Gen(n.into()), pos }),
            prop::sample::select(vec!["H", "Hstar", "K"])
                .prop_map(move |o| Expr { node: Node::Id(parse_obj(o).unwrap()), pos }),
            (any::<bool>(), prop::sample::select(vec!["H", "K"]), prop::sample::select(vec!["H", "Hstar"])).prop_map(
                move |(inverse, l, r)| Expr {
                    node: Node::Braid { inverse, left: parse_obj(l).unwrap(), right: parse_obj(r).unwrap() },
                    pos
                }
            ),
        ];
        leaf.prop_recursive(4, 24, 3, move |inner| {
            prop_oneof![
                prop::collection::vec(inner.clone(), 2..4).prop_map(move |v| Expr { node: Node::Compose(v), pos }),
                prop::collection::vec(inner, 2..4).prop_map(move |v| Expr { node: Node::Tensor(v), pos }),
            ]
        })
    }

    proptest! {
        #[test]
        fn parse_after_print_is_identity(e in arb_expr()) {
            let text = e.to_string();
            let back = parse_expr(&text).unwrap();
            prop_assert_eq!(&back, &e);
            prop_assert_eq!(back.to_string(), text);
        }

        #[test]
        fn eval_respects_composition(f in prop::sample::select(vec!["lambda", "id[H]", "mu . delta"]),
                                     g in prop::sample::select(vec!["lambda", "mu . (lambda ox id[H]) . delta", "id[H]"])) {
            let s = c2();
            let env = Env::new(&s);
            let fg = env.eval(&parse_expr(&format!("({f}) . ({g})")).unwrap()).unwrap().mor;
            let ef = env.eval(&parse_expr(f).unwrap()).unwrap().mor;
            let eg = env.eval(&parse_expr(g).unwrap()).unwrap().mor;
            prop_assert_eq!(fg, ef.after(&eg));
        }
    }
}
