//! Freely reduced words over a generating set, and presentations.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// A word in the free group on indexed generators, stored as runs
/// `(generator, exponent)` with no zero exponents and no adjacent runs on
/// the same generator. Construction reduces freely.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    runs: Vec<(usize, i64)>,
}

impl Word {
    pub fn empty() -> Self {
        Word { runs: Vec::new() }
    }

    pub fn generator(gen: usize) -> Self {
        Word { runs: alloc::vec![(gen, 1)] }
    }

    pub fn from_runs(runs: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut w = Word::empty();
        for (g, e) in runs {
            w.push_run(g, e);
        }
        w
    }

    pub fn runs(&self) -> &[(usize, i64)] {
        &self.runs
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Number of letters counted with multiplicity.
    pub fn len(&self) -> usize {
        self.runs.iter().map(|(_, e)| e.unsigned_abs() as usize).sum()
    }

    fn push_run(&mut self, gen: usize, exp: i64) {
        if exp == 0 {
            return;
        }
        match self.runs.last_mut() {
            Some((g, e)) if *g == gen => {
                *e += exp;
                if *e == 0 {
                    self.runs.pop();
                }
            }
            _ => self.runs.push((gen, exp)),
        }
    }

    pub fn concat(&self, rhs: &Word) -> Word {
        let mut out = self.clone();
        for &(g, e) in &rhs.runs {
            out.push_run(g, e);
        }
        out
    }

    pub fn inverse(&self) -> Word {
        Word { runs: self.runs.iter().rev().map(|&(g, e)| (g, -e)).collect() }
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::empty();
        for _ in 0..n.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// Single letters (generator index, +-1), for the coset-table scans.
    pub fn letters(&self) -> impl Iterator<Item = (usize, bool)> + '_ {
        self.runs.iter().flat_map(|&(g, e)| {
            let inverse = e < 0;
            (0..e.unsigned_abs()).map(move |_| (g, inverse))
        })
    }

    /// Exponent sum per generator, the abelianized image.
    pub fn exponent_sums(&self, num_gens: usize) -> Vec<i64> {
        let mut sums = alloc::vec![0i64; num_gens];
        for &(g, e) in &self.runs {
            sums[g] += e;
        }
        sums
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.runs.iter().map(|&(g, _)| g).max()
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word[")?;
        for (i, (g, e)) in self.runs.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "g{g}^{e}")?;
        }
        write!(f, "]")
    }
}

/// A finitely presented group: named generators and relator words.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    /// Panics if a relator mentions an undeclared generator; the parser
    /// reports that case with a location instead.
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Self {
        let n = generators.len();
        for r in &relators {
            if let Some(g) = r.max_generator() {
                assert!(g < n, "relator mentions undeclared generator index {g}");
            }
        }
        Presentation { generators, relators }
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Canonical text form, parseable by the DSL with exact round-trip.
    pub fn to_text(&self) -> String {
        use core::fmt::Write;
        let mut s = String::from("gens:");
        for g in &self.generators {
            let _ = write!(s, " {g}");
        }
        let _ = write!(s, " ; rels: ");
        for (i, r) in self.relators.iter().enumerate() {
            if i > 0 {
                let _ = write!(s, ", ");
            }
            if r.is_empty() {
                // An empty relator has no literal spelling; print a trivial one.
                let _ = write!(s, "{}^0", self.generators.first().map(String::as_str).unwrap_or("x"));
                continue;
            }
            for (j, (g, e)) in r.runs().iter().enumerate() {
                if j > 0 {
                    let _ = write!(s, " ");
                }
                if *e == 1 {
                    let _ = write!(s, "{}", self.generators[*g]);
                } else {
                    let _ = write!(s, "{}^{}", self.generators[*g], e);
                }
            }
        }
        s
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}
