//! Hopf algebras given by generators, a finite confluent rewriting system and
//! the structure maps on generators.

use std::collections::{BTreeMap, HashMap};

use parking_lot::RwLock;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;

use crate::check::Check;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::hopf::{
    format_element, format_letters, tensor_mul_same, tensor_of, tensor_word, word, Algebra, Character, Element, Flags,
    HopfAlgebra, LetterInfo, Tensor, Word,
};

/// On-disk form of a presentation.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationSpec {
    pub name: String,
    #[serde(default)]
    pub field: Option<String>,
    #[serde(rename = "generator")]
    pub generators: Vec<GeneratorSpec>,
    #[serde(rename = "relation", default)]
    pub relations: Vec<RelationSpec>,
    /// Generator name to `[coef, left word, right word]` terms.
    pub coproduct: BTreeMap<String, Vec<[String; 3]>>,
    pub counit: BTreeMap<String, String>,
    /// Generator name to `[coef, word]` terms.
    pub antipode: BTreeMap<String, Vec<[String; 2]>>,
    #[serde(rename = "character", default)]
    pub characters: BTreeMap<String, BTreeMap<String, String>>,
    #[serde(rename = "pair", default)]
    pub pairs: Vec<PairSpec>,
    pub flags: FlagSpec,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorSpec {
    pub name: String,
    #[serde(default = "one_u32")]
    pub degree: u32,
    #[serde(default)]
    pub inverse: Option<String>,
}

fn one_u32() -> u32 {
    1
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationSpec {
    pub lhs: String,
    pub rhs: Vec<[String; 2]>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairSpec {
    pub character: String,
    pub sigma: String,
    /// Expected outcome of the involution check; verified at load.
    pub involutive: bool,
}

#[derive(Clone, Copy, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FlagSpec {
    pub commutative: bool,
    pub cocommutative: bool,
}

#[derive(Clone, Debug)]
struct Rule {
    lhs: Word,
    rhs: Vec<(Scalar, Word)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

pub struct Presented {
    name: String,
    field: Field,
    letters: Vec<LetterInfo>,
    rules: Vec<Rule>,
    by_first: Vec<Vec<usize>>,
    coproduct: Vec<Tensor>,
    counit: Vec<Scalar>,
    antipode: Vec<Element>,
    characters: Vec<Character>,
    pairs: Vec<PairSpec>,
    flags: Flags,
    nf_cache: RwLock<HashMap<Word, Element>>,
    cop_cache: RwLock<HashMap<Word, Tensor>>,
    anti_cache: RwLock<HashMap<Word, Element>>,
    basis_cache: RwLock<HashMap<u32, Vec<Word>>>,
}

fn parse_raw_word(letters: &[LetterInfo], s: &str) -> Result<Word> {
    let find = |n: &str| letters.iter().position(|l| l.name == n).map(|i| i as u16);
    let mut out = Word::new();
    for tok in s.split_whitespace() {
        if tok == "1" {
            continue;
        }
        if let Some(l) = find(tok) {
            out.push(l);
            continue;
        }
        let (base, e) = tok.rsplit_once('^').ok_or_else(|| Error::UnknownGenerator(tok.to_string()))?;
        let l = find(base).ok_or_else(|| Error::UnknownGenerator(base.to_string()))?;
        let e: i64 = e.parse().map_err(|_| Error::Parse(format!("bad exponent in '{tok}'")))?;
        let l = if e < 0 {
            letters[l as usize].inverse.ok_or_else(|| Error::NonInvertibleInverse(base.to_string()))?
        } else {
            l
        };
        out.extend(std::iter::repeat_n(l, e.unsigned_abs() as usize));
    }
    Ok(out)
}

impl Presented {
    pub fn from_toml(src: &str, field: Option<Field>) -> Result<Self> {
        let spec: PresentationSpec = toml::from_str(src).map_err(|e| Error::Parse(e.to_string()))?;
        Presented::build(spec, field)
    }

    /// Builds the instance and verifies confluence of the rules, that the
    /// structure maps and characters respect the relations, and the declared
    /// involution status of every listed pair.
    pub fn build(spec: PresentationSpec, field: Option<Field>) -> Result<Self> {
        let field = match (field, &spec.field) {
            (Some(f), _) => f,
            (None, Some(s)) => s.parse()?,
            (None, None) => Field::Rational,
        };
        let mut letters: Vec<LetterInfo> = spec
            .generators
            .iter()
            .map(|g| LetterInfo { name: g.name.clone(), degree: g.degree, inverse: None })
            .collect();
        if letters.iter().any(|l| l.degree == 0) {
            return Err(Error::Config("generator degrees must be positive".into()));
        }
        for (i, g) in spec.generators.iter().enumerate() {
            if let Some(inv) = &g.inverse {
                let j =
                    letters.iter().position(|l| &l.name == inv).ok_or_else(|| Error::UnknownGenerator(inv.clone()))?;
                letters[i].inverse = Some(j as u16);
            }
        }
        let letter_of =
            |n: &str| letters.iter().position(|l| l.name == n).ok_or_else(|| Error::UnknownGenerator(n.to_string()));
        let coef = |s: &str| field.parse_scalar(s);

        let mut rules = Vec::new();
        for (i, l) in letters.iter().enumerate() {
            if let Some(j) = l.inverse {
                if letters[j as usize].inverse != Some(i as u16) {
                    return Err(Error::Config(format!("inverse of {} is not symmetric", l.name)));
                }
                rules.push(Rule { lhs: word(&[i as u16, j]), rhs: vec![(field.one(), Word::new())] });
            }
        }
        for r in &spec.relations {
            let lhs = parse_raw_word(&letters, &r.lhs)?;
            if lhs.is_empty() {
                return Err(Error::Config("relation with empty left side".into()));
            }
            let rhs =
                r.rhs.iter().map(|[c, w]| Ok((coef(c)?, parse_raw_word(&letters, w)?))).collect::<Result<Vec<_>>>()?;
            rules.push(Rule { lhs, rhs });
        }
        let mut by_first = vec![Vec::new(); letters.len()];
        for (i, r) in rules.iter().enumerate() {
            by_first[r.lhs[0] as usize].push(i);
        }

        let n = letters.len();
        let missing = |what: &str, g: &str| Error::Config(format!("{what} of generator {g} is not given"));
        let mut shell = Presented {
            name: spec.name.clone(),
            field,
            letters: letters.clone(),
            rules,
            by_first,
            coproduct: Vec::new(),
            counit: Vec::new(),
            antipode: Vec::new(),
            characters: Vec::new(),
            pairs: spec.pairs.clone(),
            flags: Flags {
                commutative: spec.flags.commutative,
                cocommutative: spec.flags.cocommutative,
                finite_dimensional: false,
            },
            nf_cache: RwLock::new(HashMap::new()),
            cop_cache: RwLock::new(HashMap::new()),
            anti_cache: RwLock::new(HashMap::new()),
            basis_cache: RwLock::new(HashMap::new()),
        };
        if let Some(w) = shell.confluence_witness() {
            return Err(Error::NonConfluentPresentation { word: format_letters(&letters, &w) });
        }

        let mut coproduct = Vec::with_capacity(n);
        let mut counit = Vec::with_capacity(n);
        let mut antipode = Vec::with_capacity(n);
        for l in &letters {
            let terms = spec.coproduct.get(&l.name).ok_or_else(|| missing("coproduct", &l.name))?;
            let mut t = Tensor::zero();
            for [c, a, b] in terms {
                let a = shell.normalize(&parse_raw_word(&letters, a)?);
                let b = shell.normalize(&parse_raw_word(&letters, b)?);
                t.add_scaled(&coef(c)?, &tensor_of(&[a, b]));
            }
            coproduct.push(t);
            counit.push(coef(spec.counit.get(&l.name).ok_or_else(|| missing("counit", &l.name))?)?);
            let terms = spec.antipode.get(&l.name).ok_or_else(|| missing("antipode", &l.name))?;
            let mut s = Element::zero();
            for [c, w] in terms {
                s.add_scaled(&coef(c)?, &shell.normalize(&parse_raw_word(&letters, w)?));
            }
            antipode.push(s);
        }
        shell.coproduct = coproduct;
        shell.counit = counit;
        shell.antipode = antipode;

        let mut characters = vec![Character::new("epsilon", shell.counit.clone())];
        for (name, vals) in &spec.characters {
            let mut values = vec![field.zero(); n];
            for (g, v) in vals {
                values[letter_of(g)?] = coef(v)?;
            }
            if vals.len() != n {
                return Err(Error::Config(format!("character {name} must be given on every generator")));
            }
            characters.push(Character::new(name.clone(), values));
        }
        shell.characters = characters;
        shell.check_relations()?;
        shell.check_pairs()?;
        Ok(shell)
    }

    fn find(&self, w: &Word, strategy: Strategy) -> Option<(usize, usize)> {
        let matches_at = |i: usize| {
            self.by_first[w[i] as usize]
                .iter()
                .copied()
                .find(|&r| w[i..].starts_with(&self.rules[r].lhs))
                .map(|r| (i, r))
        };
        match strategy {
            Strategy::Leftmost => (0..w.len()).find_map(matches_at),
            Strategy::Rightmost => (0..w.len()).rev().find_map(matches_at),
        }
    }

    fn rewrite(&self, w: &Word, at: usize, rule: usize) -> Vec<(Scalar, Word)> {
        let r = &self.rules[rule];
        r.rhs
            .iter()
            .map(|(c, mid)| {
                let mut out: Word = w[..at].iter().copied().collect();
                out.extend(mid.iter().copied());
                out.extend(w[at + r.lhs.len()..].iter().copied());
                (c.clone(), out)
            })
            .collect()
    }

    /// Normal form of a raw word (memoized, leftmost reduction).
    pub fn normalize(&self, w: &Word) -> Element {
        if let Some(e) = self.nf_cache.read().get(w) {
            return e.clone();
        }
        let out = match self.find(w, Strategy::Leftmost) {
            None => Element::single(w.clone(), self.field.one()),
            Some((i, r)) => {
                let mut acc = Element::zero();
                for (c, w2) in self.rewrite(w, i, r) {
                    acc.add_scaled(&c, &self.normalize(&w2));
                }
                acc
            }
        };
        self.nf_cache.write().insert(w.clone(), out.clone());
        out
    }

    /// Normal form by an explicit strategy, without memoization.
    pub fn normalize_with(&self, w: &Word, strategy: Strategy) -> Element {
        let mut done = Element::zero();
        let mut todo: Vec<(Scalar, Word)> = vec![(self.field.one(), w.clone())];
        while let Some((c, w)) = todo.pop() {
            match self.find(&w, strategy) {
                None => done.add_term(w, c),
                Some((i, r)) => {
                    for (d, w2) in self.rewrite(&w, i, r) {
                        todo.push((&c * &d, w2));
                    }
                }
            }
        }
        done
    }

    /// Normalizes `samples` random words of length at most `max_len` by
    /// leftmost and rightmost reduction and compares the results.
    pub fn verify_confluence(&self, samples: usize, max_len: usize, seed: u64) -> Check {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let letters = self.letters.len() as u16;
        let words: Vec<Word> = (0..samples)
            .map(|_| {
                let len = rng.gen_range(0..=max_len);
                (0..len).map(|_| rng.gen_range(0..letters)).collect()
            })
            .collect();
        Check::run(format!("{}: leftmost and rightmost reduction agree", self.name), words, |w| {
            let left = self.normalize_with(w, Strategy::Leftmost);
            let right = self.normalize_with(w, Strategy::Rightmost);
            (left != right)
                .then(|| (format_letters(&self.letters, w), format!("{} vs {}", self.show(&left), self.show(&right))))
        })
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        self.find(w, Strategy::Leftmost).is_none()
    }

    /// Resolves every overlap and inclusion of left sides both ways; returns a
    /// critical word whose two resolutions differ.
    fn confluence_witness(&self) -> Option<Word> {
        for (i, r1) in self.rules.iter().enumerate() {
            for (j, r2) in self.rules.iter().enumerate() {
                let (a, b) = (&r1.lhs, &r2.lhs);
                let mut critical = Vec::new();
                for k in 1..a.len().min(b.len()) {
                    if a[a.len() - k..] == b[..k] {
                        let mut w: Word = a.clone();
                        w.extend(b[k..].iter().copied());
                        critical.push((w, a.len() - k));
                    }
                }
                if i != j && b.len() <= a.len() {
                    for p in 0..=a.len() - b.len() {
                        if a[p..p + b.len()] == b[..] {
                            critical.push((a.clone(), p));
                        }
                    }
                }
                for (w, pos) in critical {
                    let one = |parts: Vec<(Scalar, Word)>| {
                        let mut acc = Element::zero();
                        for (c, x) in parts {
                            acc.add_scaled(&c, &self.normalize_with(&x, Strategy::Leftmost));
                        }
                        acc
                    };
                    if one(self.rewrite(&w, 0, i)) != one(self.rewrite(&w, pos, j)) {
                        return Some(w);
                    }
                }
            }
        }
        None
    }

    fn raw_coproduct(&self, w: &Word) -> Tensor {
        let mut acc = Tensor::single(tensor_word(&[Word::new(), Word::new()]), self.field.one());
        for &l in w {
            acc = tensor_mul_same(self, &acc, &self.coproduct[l as usize]);
        }
        acc
    }

    fn raw_antipode(&self, w: &Word) -> Element {
        let mut acc = self.unit();
        for &l in w {
            acc = crate::hopf::mul(self, &self.antipode[l as usize], &acc);
        }
        acc
    }

    fn check_relations(&self) -> Result<()> {
        let bad = |what: &str, r: &Rule| {
            Error::Config(format!("{what} does not respect relation {} -> ...", format_letters(&self.letters, &r.lhs)))
        };
        for r in &self.rules {
            let mut cop = Tensor::zero();
            let mut anti = Element::zero();
            for (c, w) in &r.rhs {
                cop.add_scaled(c, &self.raw_coproduct(w));
                anti.add_scaled(c, &self.raw_antipode(w));
            }
            if self.raw_coproduct(&r.lhs) != cop {
                return Err(bad("coproduct", r));
            }
            if self.raw_antipode(&r.lhs) != anti {
                return Err(bad("antipode", r));
            }
            for ch in &self.characters {
                let mut rhs = self.field.zero();
                for (c, w) in &r.rhs {
                    rhs = &rhs + &(c * &ch.eval_word(self.field, w));
                }
                if ch.eval_word(self.field, &r.lhs) != rhs {
                    return Err(bad(&format!("character {}", ch.name), r));
                }
            }
        }
        Ok(())
    }

    fn check_pairs(&self) -> Result<()> {
        for p in &self.pairs {
            let pair = crate::hopf::ModularPair::parse(self, &format!("{},{}", p.character, p.sigma))?;
            pair.validate(self, 2)?;
            let d = self.letters.iter().map(|l| l.degree).max().unwrap_or(1) * 2;
            let c = crate::hopf::checks::check_modular_involution(self, &pair, d);
            if c.passed != p.involutive {
                return Err(Error::Config(format!(
                    "pair {} declared involutive = {} but the check gives {}",
                    pair.label, p.involutive, c.passed
                )));
            }
        }
        Ok(())
    }

    /// Formats an element for diagnostics.
    pub fn show(&self, e: &Element) -> String {
        format_element(self, e)
    }
}

impl Algebra for Presented {
    fn name(&self) -> &str {
        &self.name
    }
    fn field(&self) -> Field {
        self.field
    }
    fn letters(&self) -> &[LetterInfo] {
        &self.letters
    }
    fn mul_words(&self, a: &Word, b: &Word) -> Element {
        if a.is_empty() {
            return Element::single(b.clone(), self.field.one());
        }
        if b.is_empty() {
            return Element::single(a.clone(), self.field.one());
        }
        let mut w = a.clone();
        w.extend(b.iter().copied());
        self.normalize(&w)
    }
    fn degree(&self, w: &Word) -> u32 {
        w.iter().map(|&l| self.letters[l as usize].degree).sum()
    }
    fn basis_up_to(&self, d: u32) -> Vec<Word> {
        if let Some(b) = self.basis_cache.read().get(&d) {
            return b.clone();
        }
        let mut out = vec![Word::new()];
        let mut frontier = vec![Word::new()];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for w in &frontier {
                for l in 0..self.letters.len() as u16 {
                    let mut w2 = w.clone();
                    w2.push(l);
                    if self.degree(&w2) > d {
                        continue;
                    }
                    let ends_in_lhs = self.rules.iter().any(|r| w2.ends_with(&r.lhs));
                    if !ends_in_lhs {
                        next.push(w2);
                    }
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out.sort_by(|a, b| self.degree(a).cmp(&self.degree(b)).then_with(|| a.cmp(b)));
        self.basis_cache.write().insert(d, out.clone());
        out
    }
    fn is_finite_dimensional(&self) -> bool {
        false
    }
    fn is_graded(&self) -> bool {
        self.rules.is_empty()
    }
}

impl HopfAlgebra for Presented {
    fn coproduct_word(&self, w: &Word) -> Tensor {
        if w.is_empty() {
            return Tensor::single(tensor_word(&[Word::new(), Word::new()]), self.field.one());
        }
        if w.len() == 1 {
            return self.coproduct[w[0] as usize].clone();
        }
        if let Some(t) = self.cop_cache.read().get(w) {
            return t.clone();
        }
        let (last, init) = w.split_last().unwrap();
        let init: Word = init.iter().copied().collect();
        let t = tensor_mul_same(self, &self.coproduct_word(&init), &self.coproduct[*last as usize]);
        self.cop_cache.write().insert(w.clone(), t.clone());
        t
    }
    fn counit_word(&self, w: &Word) -> Scalar {
        let mut acc = self.field.one();
        for &l in w {
            acc = &acc * &self.counit[l as usize];
        }
        acc
    }
    fn antipode_word(&self, w: &Word) -> Element {
        if w.is_empty() {
            return self.unit();
        }
        if w.len() == 1 {
            return self.antipode[w[0] as usize].clone();
        }
        if let Some(e) = self.anti_cache.read().get(w) {
            return e.clone();
        }
        let (last, init) = w.split_last().unwrap();
        let init: Word = init.iter().copied().collect();
        let e = crate::hopf::mul(self, &self.antipode[*last as usize], &self.antipode_word(&init));
        self.anti_cache.write().insert(w.clone(), e.clone());
        e
    }
    fn declared_flags(&self) -> Flags {
        self.flags
    }
    fn characters(&self) -> Vec<Character> {
        self.characters.clone()
    }
    fn advertised_pairs(&self) -> Vec<(String, String, String)> {
        let mut out = vec![("(epsilon,1)".to_string(), "epsilon".to_string(), "1".to_string())];
        for p in self.pairs.iter().filter(|p| p.involutive) {
            let label = format!("({},{})", p.character, p.sigma);
            if !out.iter().any(|(l, _, _)| *l == label) {
                out.push((label, p.character.clone(), p.sigma.clone()));
            }
        }
        out
    }
}

impl Presented {
    /// Every listed pair with its declared involution status.
    pub fn listed_pairs(&self) -> Vec<(String, bool)> {
        self.pairs.iter().map(|p| (format!("{},{}", p.character, p.sigma), p.involutive)).collect()
    }
}

fn terms3(c: &str, a: &str, b: &str) -> [String; 3] {
    [c.into(), a.into(), b.into()]
}

/// The tensor algebra on `dim` primitive generators `v1..v<dim>`.
pub fn tensor_algebra(dim: usize, field: Field) -> Result<Presented> {
    if dim == 0 {
        return Err(Error::Config("tensor algebra needs dim V >= 1".into()));
    }
    let names: Vec<String> = (1..=dim).map(|i| format!("v{i}")).collect();
    let spec = PresentationSpec {
        name: format!("tensor:{dim}"),
        field: None,
        generators: names.iter().map(|n| GeneratorSpec { name: n.clone(), degree: 1, inverse: None }).collect(),
        relations: Vec::new(),
        coproduct: names.iter().map(|n| (n.clone(), vec![terms3("1", n, "1"), terms3("1", "1", n)])).collect(),
        counit: names.iter().map(|n| (n.clone(), "0".to_string())).collect(),
        antipode: names.iter().map(|n| (n.clone(), vec![["-1".into(), n.clone()]])).collect(),
        characters: BTreeMap::new(),
        pairs: Vec::new(),
        flags: FlagSpec { commutative: dim == 1, cocommutative: true },
    };
    Presented::build(spec, Some(field))
}

/// Laurent polynomials `k[z, z^-1]` with `z` grouplike.
pub fn laurent(field: Field) -> Result<Presented> {
    let gens = [("z", "z^-1"), ("z^-1", "z")];
    let spec = PresentationSpec {
        name: "laurent".into(),
        field: None,
        generators: gens
            .iter()
            .map(|(n, i)| GeneratorSpec { name: n.to_string(), degree: 1, inverse: Some(i.to_string()) })
            .collect(),
        relations: Vec::new(),
        coproduct: gens.iter().map(|(n, _)| (n.to_string(), vec![terms3("1", n, n)])).collect(),
        counit: gens.iter().map(|(n, _)| (n.to_string(), "1".to_string())).collect(),
        antipode: gens.iter().map(|(n, i)| (n.to_string(), vec![["1".into(), i.to_string()]])).collect(),
        characters: BTreeMap::new(),
        pairs: Vec::new(),
        flags: FlagSpec { commutative: true, cocommutative: true },
    };
    Presented::build(spec, Some(field))
}

pub const UQSL2_TOML: &str = include_str!("../../data/instances/uqsl2.toml");
pub const ASLQ2_TOML: &str = include_str!("../../data/instances/aslq2.toml");

pub fn uqsl2() -> Result<Presented> {
    Presented::from_toml(UQSL2_TOML, None)
}

pub fn aslq2() -> Result<Presented> {
    Presented::from_toml(ASLQ2_TOML, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::parse_word_expr;

    #[test]
    fn uqsl2_reorders_x_past_sigma() {
        let h = uqsl2().unwrap();
        let f = h.field();
        let e = parse_word_expr(&h, "x K").unwrap();
        let want = parse_word_expr(&h, "K x").unwrap().scale(&f.parse_scalar("q^-2").unwrap());
        assert_eq!(e, want);
    }

    #[test]
    fn uqsl2_commutator() {
        let h = uqsl2().unwrap();
        let f = h.field();
        let c = f.parse_scalar("1/(q-q^-1)").unwrap();
        let mut want = parse_word_expr(&h, "x y").unwrap();
        want.add_scaled(&c.neg(), &parse_word_expr(&h, "K").unwrap());
        want.add_scaled(&c, &parse_word_expr(&h, "K^-1").unwrap());
        assert_eq!(parse_word_expr(&h, "y x").unwrap(), want);
    }

    #[test]
    fn aslq2_ux() {
        let h = aslq2().unwrap();
        let q = h.field().q().unwrap();
        let e = parse_word_expr(&h, "u x").unwrap();
        assert_eq!(e, parse_word_expr(&h, "x u").unwrap().scale(&q));
    }

    #[test]
    fn tensor_basis_counts() {
        let t = tensor_algebra(2, Field::Rational).unwrap();
        assert_eq!(t.basis_up_to(3).len(), 1 + 2 + 4 + 8);
    }

    #[test]
    fn non_confluent_rules_are_rejected() {
        let src = r#"
name = "bad"
[[generator]]
name = "a"
[[generator]]
name = "b"
[[relation]]
lhs = "a b"
rhs = [["1", "b"]]
[[relation]]
lhs = "b a"
rhs = [["1", "a"]]
[coproduct]
a = [["1", "a", "1"], ["1", "1", "a"]]
b = [["1", "b", "1"], ["1", "1", "b"]]
[counit]
a = "0"
b = "0"
[antipode]
a = [["-1", "a"]]
b = [["-1", "b"]]
[flags]
commutative = false
cocommutative = true
"#;
        assert!(matches!(
            Presented::from_toml(src, Some(Field::Rational)),
            Err(Error::NonConfluentPresentation { .. })
        ));
    }
}
