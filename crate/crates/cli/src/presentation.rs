//! The line-oriented presentation format shared by every subcommand.
//!
//! ```text
//! mode: sgp              # sgp | mon | alg
//! field: Q               # alg only, Q or F<p>
//! alphabet: a b
//! order: shortlex a < b  # or: order: wtlex a=1 b=2
//! precedence: a < b      # wtlex only, optional
//! rules:
//!   b.a -> a.b
//! ```
//!
//! In `alg` mode the `rules:` section is replaced by `polys:` with one
//! polynomial per line, e.g. `2*a.b - 1/2*b + 3`.

use std::fmt::Write as _;

use kbgb_core::words::OrderKind;
use kbgb_core::{
    Alphabet, Basis, Field, Mode, MonomialOrder, NcPolynomial, PolyError, RewriteError, RewriteSystem, Word, WordError,
};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PresentationMode {
    Sgp,
    Mon,
    Alg,
}

impl PresentationMode {
    pub fn keyword(self) -> &'static str {
        match self {
            PresentationMode::Sgp => "sgp",
            PresentationMode::Mon => "mon",
            PresentationMode::Alg => "alg",
        }
    }

    /// Word mode of the underlying engines; algebras admit constants.
    pub fn word_mode(self) -> Mode {
        match self {
            PresentationMode::Sgp => Mode::Semigroup,
            PresentationMode::Mon | PresentationMode::Alg => Mode::Monoid,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Relations {
    /// `(lhs, rhs)` in file order, each with `lhs > rhs`.
    Rules(Vec<(Word, Word)>),
    Polys(Vec<NcPolynomial>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub mode: PresentationMode,
    pub field: Field,
    pub alphabet: Alphabet,
    pub order: MonomialOrder,
    pub relations: Relations,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("lexical error: {0}")]
    Lexical(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("duplicate symbol `{0}`")]
    DuplicateSymbol(String),
    #[error("malformed rule: {0}")]
    MalformedRule(String),
    #[error("malformed polynomial: {0}")]
    MalformedPoly(String),
    #[error("rule {0} -> {1} is not oriented: left side must be greater")]
    Misoriented(String, String),
    #[error("bad order: {0}")]
    BadOrder(String),
    #[error("{0}")]
    Other(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    /// 1-based; 0 for problems with the file as a whole.
    pub line: usize,
    pub kind: ParseErrorKind,
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

fn word_error(line: usize, e: WordError) -> ParseError {
    let kind = match e {
        WordError::UnknownSymbol(s) => ParseErrorKind::UnknownSymbol(s),
        WordError::DuplicateSymbol(s) => ParseErrorKind::DuplicateSymbol(s),
        WordError::BadOrder(s) => ParseErrorKind::BadOrder(s),
        WordError::Malformed(s) | WordError::InvalidSymbol(s) => ParseErrorKind::Lexical(format!("`{s}`")),
        other => ParseErrorKind::Other(other.to_string()),
    };
    err(line, kind)
}

#[derive(Default)]
struct Header {
    mode: Option<(usize, PresentationMode)>,
    field: Option<(usize, Field)>,
    alphabet: Option<(usize, Alphabet)>,
    order: Option<(usize, String)>,
    precedence: Option<(usize, String)>,
}

enum Section {
    Header,
    Rules,
    Polys,
}

fn set_once<T>(slot: &mut Option<(usize, T)>, line: usize, key: &str, value: T) -> Result<(), ParseError> {
    if slot.is_some() {
        return Err(err(line, ParseErrorKind::Lexical(format!("`{key}` given twice"))));
    }
    *slot = Some((line, value));
    Ok(())
}

/// Parses `sym < sym < ...` into letters, each symbol exactly once.
fn parse_precedence(alphabet: &Alphabet, line: usize, text: &str) -> Result<Vec<u32>, ParseError> {
    let mut letters = Vec::new();
    for name in text.split('<').map(str::trim) {
        if name.is_empty() {
            return Err(err(line, ParseErrorKind::BadOrder(format!("empty entry in `{text}`"))));
        }
        let l = alphabet.index_of(name).ok_or_else(|| err(line, ParseErrorKind::UnknownSymbol(name.to_string())))?;
        if letters.contains(&l) {
            return Err(err(line, ParseErrorKind::DuplicateSymbol(name.to_string())));
        }
        letters.push(l);
    }
    if letters.len() != alphabet.len() {
        return Err(err(
            line,
            ParseErrorKind::BadOrder(format!("{} of {} symbols ranked", letters.len(), alphabet.len())),
        ));
    }
    Ok(letters)
}

fn parse_order(alphabet: &Alphabet, header: &Header) -> Result<MonomialOrder, ParseError> {
    let Some((line, order_text)) = &header.order else {
        if let Some((line, _)) = &header.precedence {
            return Err(err(*line, ParseErrorKind::BadOrder("`precedence` without a wtlex order".into())));
        }
        return Ok(MonomialOrder::shortlex(alphabet.len()));
    };
    let line = *line;
    let (kind, rest) = order_text.split_once(char::is_whitespace).unwrap_or((order_text.as_str(), ""));
    match kind {
        "shortlex" => {
            if let Some((pline, _)) = &header.precedence {
                return Err(err(*pline, ParseErrorKind::BadOrder("`precedence` only applies to wtlex".into())));
            }
            if rest.trim().is_empty() {
                return Ok(MonomialOrder::shortlex(alphabet.len()));
            }
            let precedence = parse_precedence(alphabet, line, rest)?;
            MonomialOrder::shortlex_with(&precedence).map_err(|e| word_error(line, e))
        }
        "wtlex" => {
            let mut weights: Vec<Option<u64>> = vec![None; alphabet.len()];
            for item in rest.split_whitespace() {
                let (name, weight) = item
                    .split_once('=')
                    .ok_or_else(|| err(line, ParseErrorKind::BadOrder(format!("expected sym=weight, got `{item}`"))))?;
                let l = alphabet
                    .index_of(name)
                    .ok_or_else(|| err(line, ParseErrorKind::UnknownSymbol(name.to_string())))?;
                let w: u64 =
                    weight.parse().map_err(|_| err(line, ParseErrorKind::Lexical(format!("bad weight `{weight}`"))))?;
                if weights[l as usize].replace(w).is_some() {
                    return Err(err(line, ParseErrorKind::DuplicateSymbol(name.to_string())));
                }
            }
            let weights: Vec<u64> = weights
                .into_iter()
                .enumerate()
                .map(|(i, w)| {
                    w.ok_or_else(|| {
                        let name = alphabet.symbol(i as u32).unwrap_or("?").to_string();
                        err(line, ParseErrorKind::BadOrder(format!("no weight for `{name}`")))
                    })
                })
                .collect::<Result<_, _>>()?;
            let precedence = match &header.precedence {
                Some((pline, text)) => parse_precedence(alphabet, *pline, text)?,
                None => (0..alphabet.len() as u32).collect(),
            };
            MonomialOrder::weighted_shortlex(&precedence, weights).map_err(|e| word_error(line, e))
        }
        other => Err(err(line, ParseErrorKind::BadOrder(format!("unknown order `{other}`")))),
    }
}

/// Removes a trailing `# comment`.
fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(code, _)| code)
}

fn without_whitespace(text: &str) -> String {
    text.chars().filter(|c| !c.is_whitespace()).collect()
}

fn parse_rule(
    alphabet: &Alphabet,
    order: &MonomialOrder,
    mode: Mode,
    line: usize,
    text: &str,
) -> Result<(Word, Word), ParseError> {
    let parts: Vec<&str> = text.split("->").collect();
    if parts.len() != 2 {
        return Err(err(line, ParseErrorKind::MalformedRule(format!("expected `lhs -> rhs`, got `{text}`"))));
    }
    let side = |s: &str| {
        let s = without_whitespace(s);
        if s.is_empty() {
            return Err(err(line, ParseErrorKind::MalformedRule(format!("empty side in `{text}`"))));
        }
        alphabet.parse_word(&s).map_err(|e| word_error(line, e))
    };
    let (lhs, rhs) = (side(parts[0])?, side(parts[1])?);
    if !mode.allows_empty() && (lhs.is_empty() || rhs.is_empty()) {
        return Err(err(line, ParseErrorKind::MalformedRule("empty word outside monoid mode".into())));
    }
    if !order.greater(&lhs, &rhs) {
        return Err(err(line, ParseErrorKind::Misoriented(alphabet.render(&lhs), alphabet.render(&rhs))));
    }
    Ok((lhs, rhs))
}

/// Parses a polynomial such as `2*a.b - 1/2*b + 3`. Coefficients are
/// unsigned integers or fractions and may be followed by `*` and a word; a
/// term without a word is a constant.
pub fn parse_polynomial(alphabet: &Alphabet, field: Field, text: &str) -> Result<NcPolynomial, PolyErrorAt> {
    let compact = without_whitespace(text);
    let malformed = |why: String| PolyErrorAt::Malformed(why);
    if compact.is_empty() {
        return Err(malformed("empty polynomial".into()));
    }
    // split into signed terms at each `+` and `-`
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut negative = false;
    let mut current = String::new();
    for c in compact.chars() {
        if c != '+' && c != '-' {
            current.push(c);
            continue;
        }
        if current.is_empty() {
            if terms.is_empty() && !negative && c == '-' {
                negative = true;
                continue;
            }
            return Err(malformed(format!("unexpected `{c}`")));
        }
        terms.push((negative, std::mem::take(&mut current)));
        negative = c == '-';
    }
    if current.is_empty() {
        return Err(malformed("dangling sign".into()));
    }
    terms.push((negative, current));

    let mut p = NcPolynomial::zero(field);
    for (negative, term) in terms {
        let starts_with_digit = term.starts_with(|c: char| c.is_ascii_digit());
        let (coefficient, word) = match term.split_once('*') {
            Some((k, w)) => (field.parse_scalar(k).map_err(PolyErrorAt::Poly)?, Some(w)),
            None if starts_with_digit && term != "1" => (field.parse_scalar(&term).map_err(PolyErrorAt::Poly)?, None),
            None => (field.one(), Some(term.as_str())),
        };
        let word = match word {
            Some("") => return Err(malformed("missing monomial after `*`".into())),
            Some(w) => alphabet.parse_word(w).map_err(PolyErrorAt::Word)?,
            None => Word::empty(),
        };
        let coefficient = if negative { -coefficient } else { coefficient };
        p.add_term(word, coefficient);
    }
    Ok(p)
}

/// Failure of [`parse_polynomial`], before a line number is attached.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PolyErrorAt {
    #[error("{0}")]
    Malformed(String),
    #[error(transparent)]
    Word(WordError),
    #[error(transparent)]
    Poly(PolyError),
}

impl PolyErrorAt {
    fn at(self, line: usize) -> ParseError {
        match self {
            PolyErrorAt::Malformed(s) => err(line, ParseErrorKind::MalformedPoly(s)),
            PolyErrorAt::Word(e) => word_error(line, e),
            PolyErrorAt::Poly(e) => err(line, ParseErrorKind::MalformedPoly(e.to_string())),
        }
    }
}

/// Parses a presentation file; errors carry the 1-based line number.
pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let mut header = Header::default();
    let mut section = Section::Header;
    let mut body: Vec<(usize, String)> = Vec::new();
    let mut body_kind: Option<(usize, PresentationMode)> = None;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let code = strip_comment(raw).trim();
        if code.is_empty() {
            continue;
        }
        if let Some((key, value)) = code.split_once(':') {
            let (key, value) = (key.trim(), value.trim());
            let known = matches!(key, "mode" | "field" | "alphabet" | "order" | "precedence" | "rules" | "polys");
            if known {
                match key {
                    "mode" => {
                        let mode = match value {
                            "sgp" => PresentationMode::Sgp,
                            "mon" => PresentationMode::Mon,
                            "alg" => PresentationMode::Alg,
                            other => return Err(err(line, ParseErrorKind::Lexical(format!("unknown mode `{other}`")))),
                        };
                        set_once(&mut header.mode, line, key, mode)?;
                    }
                    "field" => {
                        let field = Field::parse(value).map_err(|e| err(line, ParseErrorKind::Other(e.to_string())))?;
                        set_once(&mut header.field, line, key, field)?;
                    }
                    "alphabet" => {
                        let alphabet = Alphabet::new(value.split_whitespace()).map_err(|e| word_error(line, e))?;
                        set_once(&mut header.alphabet, line, key, alphabet)?;
                    }
                    "order" => set_once(&mut header.order, line, key, value.to_string())?,
                    "precedence" => set_once(&mut header.precedence, line, key, value.to_string())?,
                    _ => {
                        if !value.is_empty() {
                            return Err(err(line, ParseErrorKind::Lexical(format!("text after `{key}:`"))));
                        }
                        let kind = if key == "rules" { PresentationMode::Sgp } else { PresentationMode::Alg };
                        if body_kind.is_some() {
                            return Err(err(
                                line,
                                ParseErrorKind::Lexical(format!("second relation section `{key}:`")),
                            ));
                        }
                        body_kind = Some((line, kind));
                        section = if key == "rules" { Section::Rules } else { Section::Polys };
                    }
                }
                continue;
            }
            if matches!(section, Section::Header) {
                return Err(err(line, ParseErrorKind::Lexical(format!("unknown directive `{key}`"))));
            }
        }
        match section {
            Section::Header => return Err(err(line, ParseErrorKind::Lexical(format!("unexpected `{code}`")))),
            Section::Rules | Section::Polys => body.push((line, code.to_string())),
        }
    }

    let (_, mode) = header.mode.ok_or_else(|| err(0, ParseErrorKind::Lexical("missing `mode:` line".into())))?;
    let (_, alphabet) =
        header.alphabet.clone().ok_or_else(|| err(0, ParseErrorKind::Lexical("missing `alphabet:` line".into())))?;
    if let Some((line, _)) = header.field {
        if mode != PresentationMode::Alg {
            return Err(err(line, ParseErrorKind::Lexical("`field:` only applies to alg mode".into())));
        }
    }
    let field = header.field.map_or(Field::Rational, |(_, f)| f);
    let order = parse_order(&alphabet, &header)?;

    if let Some((line, kind)) = body_kind {
        let wants_polys = mode == PresentationMode::Alg;
        if wants_polys != (kind == PresentationMode::Alg) {
            let expected = if wants_polys { "polys:" } else { "rules:" };
            return Err(err(line, ParseErrorKind::Lexical(format!("mode {} expects `{expected}`", mode.keyword()))));
        }
    }

    let relations = if mode == PresentationMode::Alg {
        let mut polys = Vec::new();
        for (line, text) in &body {
            let p = parse_polynomial(&alphabet, field, text).map_err(|e| e.at(*line))?;
            if p.is_zero() {
                return Err(err(*line, ParseErrorKind::MalformedPoly("polynomial is zero".into())));
            }
            polys.push(p);
        }
        Relations::Polys(polys)
    } else {
        let word_mode = mode.word_mode();
        let mut rules = Vec::new();
        for (line, text) in &body {
            rules.push(parse_rule(&alphabet, &order, word_mode, *line, text)?);
        }
        Relations::Rules(rules)
    };

    Ok(Presentation { mode, field, alphabet, order, relations })
}

/// Error raised when turning a presentation into an engine input.
#[derive(Debug, Error)]
pub enum BuildError {
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("{0}")]
    WrongMode(String),
}

impl Presentation {
    pub fn rewrite_system(&self) -> Result<RewriteSystem, BuildError> {
        match &self.relations {
            Relations::Rules(rules) => Ok(RewriteSystem::with_rules(
                self.alphabet.clone(),
                self.order.clone(),
                self.mode.word_mode(),
                rules.iter().cloned(),
            )?),
            Relations::Polys(_) => Err(BuildError::WrongMode("alg presentation has no rewrite system".into())),
        }
    }

    /// The ideal basis: the polynomials themselves in alg mode, `l - r` for
    /// every rule otherwise.
    pub fn basis(&self, field: Field) -> Result<Basis, BuildError> {
        let mut basis = Basis::new(self.alphabet.clone(), self.order.clone(), self.mode.word_mode(), field)?;
        match &self.relations {
            Relations::Rules(rules) => {
                for (l, r) in rules {
                    basis.insert(&NcPolynomial::binomial(field, l.clone(), r.clone()))?;
                }
            }
            Relations::Polys(polys) => {
                for p in polys {
                    basis.insert(p)?;
                }
            }
        }
        Ok(basis)
    }

    /// Renders the presentation in the input format; parsing the result
    /// gives back an equal presentation.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "mode: {}", self.mode.keyword());
        if self.mode == PresentationMode::Alg {
            let _ = writeln!(out, "field: {}", self.field);
        }
        let _ = writeln!(out, "alphabet: {}", self.alphabet.symbols().join(" "));
        let name = |l: u32| self.alphabet.symbol(l).unwrap_or("?").to_string();
        let precedence: Vec<String> = self.order.precedence().into_iter().map(name).collect();
        match self.order.kind() {
            OrderKind::Shortlex => {
                let _ = writeln!(out, "order: shortlex {}", precedence.join(" < "));
            }
            OrderKind::WeightedShortlex { weights } => {
                let items: Vec<String> =
                    self.alphabet.symbols().iter().zip(weights).map(|(s, w)| format!("{s}={w}")).collect();
                let _ = writeln!(out, "order: wtlex {}", items.join(" "));
                let _ = writeln!(out, "precedence: {}", precedence.join(" < "));
            }
        }
        match &self.relations {
            Relations::Rules(rules) => {
                out.push_str("rules:\n");
                for (l, r) in rules {
                    let _ = writeln!(out, "  {} -> {}", self.alphabet.render(l), self.alphabet.render(r));
                }
            }
            Relations::Polys(polys) => {
                out.push_str("polys:\n");
                for p in polys {
                    let _ = writeln!(out, "  {}", p.render(&self.alphabet, &self.order));
                }
            }
        }
        out
    }

    /// A copy with the relations replaced by the rules of `system`.
    pub fn with_system(&self, system: &RewriteSystem) -> Presentation {
        let rules = system.rules().iter().map(|r| (r.lhs.clone(), r.rhs.clone())).collect();
        Presentation { relations: Relations::Rules(rules), ..self.clone() }
    }

    /// A copy with the relations replaced by the elements of `basis`.
    pub fn with_basis(&self, basis: &Basis) -> Presentation {
        Presentation { relations: Relations::Polys(basis.polys().to_vec()), field: basis.field(), ..self.clone() }
    }
}
