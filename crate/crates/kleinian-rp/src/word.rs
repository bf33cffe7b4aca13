//! Freely reduced words over named generators.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A generator symbol. Presentations use single letters (`f`, `g`, `x`, `y`,
/// `z`, `s`, `w`, `L`, `u`, `v`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Gen(pub char);

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A freely reduced word: adjacent letters use distinct symbols and no
/// exponent is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Word {
    letters: Vec<(Gen, i32)>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn gen(g: char) -> Self {
        Word {
            letters: vec![(Gen(g), 1)],
        }
    }

    pub fn letter(g: char, e: i32) -> Self {
        let mut w = Word::empty();
        w.push(Gen(g), e);
        w
    }

    pub fn letters(&self) -> &[(Gen, i32)] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn push(&mut self, g: Gen, e: i32) {
        if e == 0 {
            return;
        }
        match self.letters.last_mut() {
            Some((last, exp)) if *last == g => {
                *exp += e;
                if *exp == 0 {
                    self.letters.pop();
                }
            }
            _ => self.letters.push((g, e)),
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.clone();
        for &(g, e) in &other.letters {
            out.push(g, e);
        }
        out
    }

    pub fn inverse(&self) -> Word {
        let mut out = Word::empty();
        for &(g, e) in self.letters.iter().rev() {
            out.push(g, -e);
        }
        out
    }

    pub fn pow(&self, k: i32) -> Word {
        let (base, reps) = if k < 0 {
            (self.inverse(), -k)
        } else {
            (self.clone(), k)
        };
        let mut out = Word::empty();
        for _ in 0..reps {
            out = out.concat(&base);
        }
        out
    }

    /// `[a, b] = a b a⁻¹ b⁻¹`.
    pub fn commutator(a: &Word, b: &Word) -> Word {
        a.concat(b).concat(&a.inverse()).concat(&b.inverse())
    }

    /// Build a word from letter pairs, reducing as it goes.
    pub fn from_letters(letters: impl IntoIterator<Item = (char, i32)>) -> Word {
        let mut out = Word::empty();
        for (g, e) in letters {
            out.push(Gen(g), e);
        }
        out
    }

    /// Symbols appearing in the word.
    pub fn symbols(&self) -> impl Iterator<Item = Gen> + '_ {
        self.letters.iter().map(|&(g, _)| g)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for &(g, e) in &self.letters {
            if e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}
