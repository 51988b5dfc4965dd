//! Finite groups by multiplication table, the group algebra kG and the
//! function algebra k^G.

use std::path::Path;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::hopf::{word, Algebra, Character, Element, Flags, HopfAlgebra, LetterInfo, Tensor, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    pub name: String,
    pub names: Vec<String>,
    /// `mul[a][b]` is the index of `ab`.
    pub mul: Vec<Vec<usize>>,
    pub identity: usize,
    pub inverse: Vec<usize>,
}

impl GroupTable {
    /// Validates closure, associativity, identity and inverses.
    pub fn new(name: impl Into<String>, names: Vec<String>, mul: Vec<Vec<usize>>) -> Result<Self> {
        let n = names.len();
        let bad = |m: String| Error::InvalidGroupTable(m);
        if n == 0 {
            return Err(bad("empty table".into()));
        }
        if mul.len() != n || mul.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(bad("table is not square over its elements".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| mul[e][g] == g && mul[g][e] == g))
            .ok_or_else(|| bad("no identity element".into()))?;
        let mut inverse = vec![0; n];
        for g in 0..n {
            inverse[g] = (0..n)
                .find(|&h| mul[g][h] == identity && mul[h][g] == identity)
                .ok_or_else(|| bad(format!("{} has no inverse", names[g])))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(bad(format!("not associative on ({}, {}, {})", names[a], names[b], names[c])));
                    }
                }
            }
        }
        Ok(GroupTable { name: name.into(), names, mul, identity, inverse })
    }

    pub fn cyclic(n: usize) -> Self {
        let names = (0..n)
            .map(|i| match i {
                0 => "e".to_string(),
                1 => "z".to_string(),
                _ => format!("z^{i}"),
            })
            .collect();
        let mul = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        GroupTable::new(format!("Z{n}"), names, mul).expect("cyclic group table")
    }

    /// The symmetric group on three letters, generated by `r = (123)` and
    /// `s = (12)`.
    pub fn s3() -> Self {
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 2, 0], [2, 0, 1], [1, 0, 2], [2, 1, 0], [0, 2, 1]];
        let names = ["e", "r", "r^2", "s", "sr", "sr^2"].map(String::from).to_vec();
        let compose = |a: &[usize; 3], b: &[usize; 3]| [a[b[0]], a[b[1]], a[b[2]]];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let mul = (0..6).map(|a| (0..6).map(|b| idx(compose(&perms[a], &perms[b]))).collect()).collect();
        GroupTable::new("S3", names, mul).expect("S3 table")
    }

    pub fn builtin(name: &str) -> Option<Self> {
        match name {
            "Z1" => Some(GroupTable::cyclic(1)),
            "Z2" => Some(GroupTable::cyclic(2)),
            "Z3" => Some(GroupTable::cyclic(3)),
            "Z4" => Some(GroupTable::cyclic(4)),
            "S3" => Some(GroupTable::s3()),
            _ => None,
        }
    }

    /// Parses a table file: the first non-comment line lists element names,
    /// each following line lists the products of one element with all of
    /// them in that order.
    pub fn parse(name: &str, src: &str) -> Result<Self> {
        let mut lines = src.lines().map(|l| l.split('#').next().unwrap().trim()).filter(|l| !l.is_empty());
        let names: Vec<String> = lines
            .next()
            .ok_or_else(|| Error::InvalidGroupTable("empty file".into()))?
            .split_whitespace()
            .map(String::from)
            .collect();
        let index = |s: &str| {
            names.iter().position(|n| n == s).ok_or_else(|| Error::InvalidGroupTable(format!("unknown element '{s}'")))
        };
        let mul =
            lines.map(|l| l.split_whitespace().map(index).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?;
        GroupTable::new(name, names, mul)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let src = std::fs::read_to_string(path)?;
        let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "G".into());
        GroupTable::parse(&name, &src)
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul[a][b] == self.mul[b][a]))
    }

    pub fn is_central(&self, g: usize) -> bool {
        (0..self.order()).all(|h| self.mul[g][h] == self.mul[h][g])
    }

    /// Homomorphisms to `{1, -1}` other than the trivial one.
    pub fn sign_characters(&self) -> Vec<Vec<i64>> {
        let n = self.order();
        if n > 16 {
            return Vec::new();
        }
        let others: Vec<usize> = (0..n).filter(|&g| g != self.identity).collect();
        let mut out = Vec::new();
        for mask in 1u32..(1 << others.len()) {
            let mut v = vec![1i64; n];
            for (i, &g) in others.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    v[g] = -1;
                }
            }
            if (0..n).all(|a| (0..n).all(|b| v[self.mul[a][b]] == v[a] * v[b])) {
                out.push(v);
            }
        }
        out
    }

    /// Letter id of a non-identity element.
    fn letter(&self, g: usize) -> u16 {
        debug_assert_ne!(g, self.identity);
        (if g < self.identity { g } else { g - 1 }) as u16
    }

    fn element(&self, l: u16) -> usize {
        let l = l as usize;
        if l < self.identity {
            l
        } else {
            l + 1
        }
    }

    pub fn word_of(&self, g: usize) -> Word {
        if g == self.identity {
            Word::new()
        } else {
            word(&[self.letter(g)])
        }
    }

    pub fn element_of(&self, w: &Word) -> usize {
        match w.as_slice() {
            [] => self.identity,
            [l] => self.element(*l),
            _ => w.iter().fold(self.identity, |acc, &l| self.mul[acc][self.element(l)]),
        }
    }

    fn letters(&self) -> Vec<LetterInfo> {
        (0..self.order())
            .filter(|&g| g != self.identity)
            .map(|g| LetterInfo { name: self.names[g].clone(), degree: 0, inverse: Some(self.letter(self.inverse[g])) })
            .collect()
    }
}

/// The group algebra kG with basis the group elements.
pub struct GroupAlgebra {
    name: String,
    field: Field,
    pub table: GroupTable,
    letters: Vec<LetterInfo>,
}

impl GroupAlgebra {
    pub fn new(table: GroupTable, field: Field) -> Self {
        GroupAlgebra { name: format!("group:{}", table.name), field, letters: table.letters(), table }
    }

    fn one(&self, w: Word) -> Element {
        Element::single(w, self.field.one())
    }
}

impl Algebra for GroupAlgebra {
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
        let t = &self.table;
        self.one(t.word_of(t.mul[t.element_of(a)][t.element_of(b)]))
    }
    fn degree(&self, _w: &Word) -> u32 {
        0
    }
    fn basis_up_to(&self, _d: u32) -> Vec<Word> {
        (0..self.table.order())
            .map(|g| self.table.word_of(g))
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect()
    }
    fn is_finite_dimensional(&self) -> bool {
        true
    }
}

impl HopfAlgebra for GroupAlgebra {
    fn coproduct_word(&self, w: &Word) -> Tensor {
        let w = self.table.word_of(self.table.element_of(w));
        Tensor::single([w.clone(), w].into_iter().collect(), self.field.one())
    }
    fn counit_word(&self, _w: &Word) -> Scalar {
        self.field.one()
    }
    fn antipode_word(&self, w: &Word) -> Element {
        let t = &self.table;
        self.one(t.word_of(t.inverse[t.element_of(w)]))
    }
    fn declared_flags(&self) -> Flags {
        Flags { commutative: self.table.is_abelian(), cocommutative: true, finite_dimensional: true }
    }
    fn characters(&self) -> Vec<Character> {
        let mut out = vec![Character::counit(self)];
        for (i, v) in self.table.sign_characters().into_iter().enumerate() {
            let name = if i == 0 { "sign".to_string() } else { format!("sign{}", i + 1) };
            let values =
                (0..self.letters.len()).map(|l| self.field.from_i64(v[self.table.element(l as u16)])).collect();
            out.push(Character::new(name, values));
        }
        out
    }
    fn advertised_pairs(&self) -> Vec<(String, String, String)> {
        let mut out = vec![("(epsilon,1)".into(), "epsilon".into(), "1".into())];
        for g in 0..self.table.order() {
            if g != self.table.identity && self.table.is_central(g) {
                let s = self.table.names[g].clone();
                out.push((format!("(epsilon,{s})"), "epsilon".into(), s));
            }
        }
        out
    }
}

/// The function algebra k^G with basis `1` and the point masses `d_g` for
/// `g != e`; `d_e = 1 - sum d_g`.
pub struct FunctionAlgebra {
    name: String,
    field: Field,
    pub table: GroupTable,
    letters: Vec<LetterInfo>,
}

impl FunctionAlgebra {
    pub fn new(table: GroupTable, field: Field) -> Self {
        let letters = table
            .letters()
            .into_iter()
            .map(|l| LetterInfo { name: format!("d[{}]", l.name), degree: 0, inverse: None })
            .collect();
        FunctionAlgebra { name: format!("fungrp:{}", table.name), field, letters, table }
    }

    /// The point mass at `g` in the working basis.
    pub fn delta(&self, g: usize) -> Element {
        let one = self.field.one();
        if g != self.table.identity {
            return Element::single(self.table.word_of(g), one);
        }
        let mut e = Element::single(Word::new(), one.clone());
        for h in 0..self.table.order() {
            if h != self.table.identity {
                e.add_term(self.table.word_of(h), one.neg());
            }
        }
        e
    }
}

impl Algebra for FunctionAlgebra {
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
        let one = self.field.one();
        match (a.is_empty(), b.is_empty()) {
            (true, _) => Element::single(b.clone(), one),
            (_, true) => Element::single(a.clone(), one),
            _ if a == b => Element::single(a.clone(), one),
            _ => Element::zero(),
        }
    }
    fn degree(&self, _w: &Word) -> u32 {
        0
    }
    fn basis_up_to(&self, _d: u32) -> Vec<Word> {
        let mut out = vec![Word::new()];
        out.extend((0..self.letters.len() as u16).map(|l| word(&[l])));
        out
    }
    fn is_finite_dimensional(&self) -> bool {
        true
    }
}

impl HopfAlgebra for FunctionAlgebra {
    fn coproduct_word(&self, w: &Word) -> Tensor {
        let one = self.field.one();
        if w.is_empty() {
            return Tensor::single([Word::new(), Word::new()].into_iter().collect(), one);
        }
        let g = self.table.element_of(w);
        let t = &self.table;
        let mut out = Tensor::zero();
        for a in 0..t.order() {
            let b = t.mul[t.inverse[a]][g];
            out.add_assign(&crate::hopf::tensor_of(&[self.delta(a), self.delta(b)]));
        }
        out
    }
    fn counit_word(&self, w: &Word) -> Scalar {
        if w.is_empty() {
            self.field.one()
        } else {
            self.field.zero()
        }
    }
    fn antipode_word(&self, w: &Word) -> Element {
        if w.is_empty() {
            return self.unit();
        }
        self.delta(self.table.inverse[self.table.element_of(w)])
    }
    fn declared_flags(&self) -> Flags {
        Flags { commutative: true, cocommutative: self.table.is_abelian(), finite_dimensional: true }
    }
    /// Evaluations at group elements; `epsilon` is evaluation at `e`.
    fn characters(&self) -> Vec<Character> {
        let mut out = vec![Character::counit(self)];
        for g in 0..self.table.order() {
            if g == self.table.identity {
                continue;
            }
            let values = (0..self.letters.len() as u16)
                .map(|l| if self.table.element(l) == g { self.field.one() } else { self.field.zero() })
                .collect();
            out.push(Character::new(format!("ev[{}]", self.table.names[g]), values));
        }
        out
    }
    fn advertised_pairs(&self) -> Vec<(String, String, String)> {
        let mut out = vec![("(epsilon,1)".into(), "epsilon".into(), "1".into())];
        for g in 0..self.table.order() {
            if g != self.table.identity && self.table.is_central(g) {
                let c = format!("ev[{}]", self.table.names[g]);
                out.push((format!("({c},1)"), c, "1".into()));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_is_nonabelian_with_one_sign() {
        let t = GroupTable::s3();
        assert!(!t.is_abelian());
        assert_eq!(t.sign_characters().len(), 1);
        assert_eq!((0..6).filter(|&g| t.is_central(g)).count(), 1);
    }

    #[test]
    fn table_file_round_trip() {
        let src = "# Klein four\ne a b c\ne a b c\na e c b\nb c e a\nc b a e\n";
        let t = GroupTable::parse("V4", src).unwrap();
        assert_eq!(t.order(), 4);
        assert!(t.is_abelian());
        assert_eq!(t.sign_characters().len(), 3);
    }

    #[test]
    fn rejects_non_associative_table() {
        let names = ["e", "a", "b"].map(String::from).to_vec();
        let mul = vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 2, 0]];
        assert!(matches!(GroupTable::new("bad", names, mul), Err(Error::InvalidGroupTable(_))));
    }

    #[test]
    fn function_algebra_unit_decomposes() {
        let k = FunctionAlgebra::new(GroupTable::cyclic(3), Field::Rational);
        let mut sum = Element::zero();
        for g in 0..3 {
            sum.add_assign(&k.delta(g));
        }
        assert_eq!(sum, k.unit());
    }
}
