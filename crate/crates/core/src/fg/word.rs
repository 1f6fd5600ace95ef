//! Group presentations and their text syntax.
//!
//! ```text
//! presentation = "<" [ gens ] "|" [ relator { "," relator } ] ">"
//!                [ ";" "H" "=" [ word { "," word } ] ] ;
//! gens         = ident { "," ident } ;
//! relator      = word [ "=" word ] ;                 (* u = v means u v⁻¹ *)
//! word         = "1" | factor { [ "*" ] factor } ;
//! factor       = atom [ "^" integer ] ;              (* negative powers allowed *)
//! atom         = ident | "(" word ")" | "[" word "," word "]" ;
//! ident        = lower { lower | digit | "_" } ;
//! ```
//!
//! `[u, v]` is the commutator `u⁻¹ v⁻¹ u v`. When every generator name is a
//! single letter, juxtaposed letters such as `ab` are read as `a b`.

use std::fmt;

use super::FgError;

const MAX_EXPONENT: u64 = 1 << 16;

/// A word in the generators: `k > 0` is generator `k − 1`, `−k` its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Word(pub Vec<i32>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn generator(index: usize) -> Self {
        Word(vec![index as i32 + 1])
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|&l| -l).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v).reduced()
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut v = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            v.extend_from_slice(&base.0);
        }
        Word(v).reduced()
    }

    /// Cancels adjacent `x x⁻¹` pairs.
    pub fn reduced(&self) -> Word {
        let mut out: Vec<i32> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    /// Coset-table columns: generator `i` is column `2i`, its inverse `2i + 1`.
    pub fn columns(&self) -> Vec<usize> {
        self.0
            .iter()
            .map(|&l| {
                let g = (l.unsigned_abs() - 1) as usize;
                if l > 0 {
                    2 * g
                } else {
                    2 * g + 1
                }
            })
            .collect()
    }
}

/// Generators, relators and optionally the generators of a subgroup `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
    pub subgroup_words: Option<Vec<Word>>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Self {
        let relators = relators.iter().map(Word::reduced).filter(|w| !w.is_empty()).collect();
        Self { generators, relators, subgroup_words: None }
    }

    pub fn with_subgroup(mut self, words: Vec<Word>) -> Self {
        self.subgroup_words = Some(words.iter().map(Word::reduced).collect());
        self
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    /// Parses the generator list of this presentation into a word.
    pub fn parse_word(&self, text: &str) -> Result<Word, FgError> {
        let mut p = Parser::new(text, self.generators.clone());
        let w = p.word()?;
        p.expect_end()?;
        Ok(w)
    }

    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_owned();
        }
        w.0.iter()
            .map(|&l| {
                let name = &self.generators[(l.unsigned_abs() - 1) as usize];
                if l > 0 {
                    name.clone()
                } else {
                    format!("{name}^-1")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| self.format_word(r)).collect();
        write!(f, "< {} | {} >", self.generators.join(", "), rels.join(", "))?;
        if let Some(h) = &self.subgroup_words {
            let ws: Vec<String> = h.iter().map(|w| self.format_word(w)).collect();
            write!(f, "; H = {}", ws.join(", "))?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    gens: Vec<String>,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, gens: Vec<String>) -> Self {
        Self { src, pos: 0, gens }
    }

    fn err(&self, message: impl Into<String>) -> FgError {
        FgError::Syntax { position: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.src[self.pos..].chars().next().map_or(0, char::len_utf8);
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), FgError> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => Err(self.err(format!("expected `{c}`, found `{found}`"))),
                None => Err(self.err(format!("expected `{c}`, found end of input"))),
            }
        }
    }

    fn expect_end(&mut self) -> Result<(), FgError> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.err(format!("unexpected `{c}`"))),
        }
    }

    fn ident(&mut self) -> Result<(usize, String), FgError> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        if !rest.starts_with(|c: char| c.is_ascii_lowercase()) {
            return Err(self.err("expected an identifier"));
        }
        let len =
            rest.find(|c: char| !(c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')).unwrap_or(rest.len());
        self.pos += len;
        Ok((start, rest[..len].to_owned()))
    }

    fn integer(&mut self) -> Result<i64, FgError> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let sign = usize::from(rest.starts_with('-') || rest.starts_with('+'));
        let digits = rest[sign..].find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len() - sign);
        if digits == 0 {
            return Err(self.err("expected an integer exponent"));
        }
        self.pos += sign + digits;
        rest[..sign + digits].parse().map_err(|_| self.err("exponent out of range"))
    }

    fn generator_word(&self, start: usize, name: &str) -> Result<Word, FgError> {
        if let Some(i) = self.gens.iter().position(|g| g == name) {
            return Ok(Word::generator(i));
        }
        let single_letters = self.gens.iter().all(|g| g.len() == 1);
        if single_letters {
            let split: Option<Vec<i32>> =
                name.chars().map(|c| self.gens.iter().position(|g| g.starts_with(c)).map(|i| i as i32 + 1)).collect();
            if let Some(v) = split {
                return Ok(Word(v));
            }
        }
        Err(FgError::UnknownGenerator { name: name.to_owned(), position: start })
    }

    fn atom(&mut self) -> Result<Word, FgError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let w = self.word()?;
                self.expect(')')?;
                Ok(w)
            }
            Some('[') => {
                self.pos += 1;
                let u = self.word()?;
                self.expect(',')?;
                let v = self.word()?;
                self.expect(']')?;
                Ok(u.inverse().concat(&v.inverse()).concat(&u).concat(&v))
            }
            Some('1') => {
                self.pos += 1;
                Ok(Word::identity())
            }
            _ => {
                let (start, name) = self.ident()?;
                self.generator_word(start, &name)
            }
        }
    }

    fn factor(&mut self) -> Result<Word, FgError> {
        let a = self.atom()?;
        if self.eat('^') {
            let k = self.integer()?;
            if k.unsigned_abs() > MAX_EXPONENT {
                return Err(self.err(format!("exponent {k} exceeds {MAX_EXPONENT}")));
            }
            Ok(a.pow(k))
        } else {
            Ok(a)
        }
    }

    fn starts_factor(&mut self) -> bool {
        matches!(self.peek(), Some(c) if c == '(' || c == '[' || c == '1' || c.is_ascii_lowercase())
    }

    fn word(&mut self) -> Result<Word, FgError> {
        let mut w = self.factor()?;
        loop {
            let explicit = self.eat('*');
            if explicit || self.starts_factor() {
                w = w.concat(&self.factor()?);
            } else {
                return Ok(w);
            }
        }
    }

    fn relator(&mut self) -> Result<Word, FgError> {
        let lhs = self.word()?;
        if self.eat('=') {
            let rhs = self.word()?;
            Ok(lhs.concat(&rhs.inverse()))
        } else {
            Ok(lhs)
        }
    }
}

/// Parses `< gens | relators >` with an optional `; H = words` clause.
pub fn parse_presentation(text: &str) -> Result<Presentation, FgError> {
    let mut p = Parser::new(text, Vec::new());
    p.expect('<')?;
    let mut gens = Vec::new();
    if p.peek() != Some('|') {
        loop {
            let (start, name) = p.ident()?;
            if gens.contains(&name) {
                return Err(FgError::Syntax { position: start, message: format!("duplicate generator `{name}`") });
            }
            gens.push(name);
            if !p.eat(',') {
                break;
            }
        }
    }
    p.expect('|')?;
    p.gens = gens.clone();
    let mut relators = Vec::new();
    if p.peek() != Some('>') {
        loop {
            relators.push(p.relator()?);
            if !p.eat(',') {
                break;
            }
        }
    }
    p.expect('>')?;
    let mut pres = Presentation::new(gens, relators);
    if p.eat(';') {
        if !p.eat('H') {
            return Err(p.err("expected `H = ...`"));
        }
        p.expect('=')?;
        let mut words = Vec::new();
        if p.peek().is_some() {
            loop {
                words.push(p.word()?);
                if !p.eat(',') {
                    break;
                }
            }
        }
        pres = pres.with_subgroup(words);
    }
    p.expect_end()?;
    Ok(pres)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_presentation() {
        let p = parse_presentation("< a | a^2 >").unwrap();
        assert_eq!(p.generators, vec!["a"]);
        assert_eq!(p.relators, vec![Word(vec![1, 1])]);
        assert_eq!(p.subgroup_words, None);
    }

    #[test]
    fn s3_presentation() {
        let p = parse_presentation("< a, b | a^2, b^3, (a b)^2 >").unwrap();
        assert_eq!(p.relators[2], Word(vec![1, 2, 1, 2]));
        let q = parse_presentation("<a,b|a*a, bbb, (ab)^2>").unwrap();
        assert_eq!(p.relators, q.relators);
    }

    #[test]
    fn commutators_and_subgroups() {
        let p = parse_presentation("< a, b | [a,b] > ; H = a^2, b").unwrap();
        assert_eq!(p.relators, vec![Word(vec![-1, -2, 1, 2])]);
        assert_eq!(p.subgroup_words, Some(vec![Word(vec![1, 1]), Word(vec![2])]));
        let e = parse_presentation("< a | > ; H =").unwrap();
        assert_eq!(e.subgroup_words, Some(vec![]));
        assert!(e.relators.is_empty());
    }

    #[test]
    fn relations_and_negative_powers() {
        let p = parse_presentation("< x, y | x^-2 = y, x x^-1 >").unwrap();
        assert_eq!(p.relators, vec![Word(vec![-1, -1, -2])]);
        let p = parse_presentation("< gen1, gen2 | gen1 gen2 gen1^-1 gen2^-1 >").unwrap();
        assert_eq!(p.relators[0], Word(vec![1, 2, -1, -2]));
    }

    #[test]
    fn errors_have_positions() {
        assert!(matches!(
            parse_presentation("< a | c^2 >"),
            Err(FgError::UnknownGenerator { ref name, position: 6 }) if name == "c"
        ));
        assert!(matches!(parse_presentation("< a | a^ >"), Err(FgError::Syntax { position: 9, .. })));
        assert!(matches!(parse_presentation("< a | a^2"), Err(FgError::Syntax { .. })));
        assert!(matches!(parse_presentation("< a, a | >"), Err(FgError::Syntax { .. })));
        assert!(matches!(parse_presentation("< a | a > extra"), Err(FgError::Syntax { .. })));
    }

    #[test]
    fn free_reduction() {
        assert_eq!(Word(vec![1, 2, -2, -1, 3]).reduced(), Word(vec![3]));
        assert_eq!(Word(vec![1, 2]).pow(-2), Word(vec![-2, -1, -2, -1]));
        assert_eq!(Word(vec![1, -2]).columns(), vec![0, 3]);
    }
}
