//! The ten presentation schemas, as first-class relator lists.
//!
//! Each discrete class-D group is isomorphic to one of:
//!
//! ```text
//!  1. GT[n,m;q]      = ⟨f,g | f^n, g^m, [f,g]^q⟩
//!  2. PH[n,m,q]      = ⟨x,y,z | x^n, y^2, z^2, (xz)^2, [x,y]^m, (yxyz)^q⟩
//!  3. H[p;n,m;q]     = ⟨x,y,s | s^2, x^n, y^m, (xy⁻¹)^p, (sxsy⁻¹)^q, (sx⁻¹y)^2⟩
//!  4. P[n,m,q]       = ⟨w,x,y,z | w^n, x^2, y^2, z^2, (wx)^2, (wy)^2, (yz)^2, (zx)^q, (zw)^m⟩
//!  5. Tet[p₁,p₂,p₃;q₁,q₂,q₃]
//!                    = ⟨x,y,z | x^{p₁}, y^{p₂}, z^{p₃}, (xy⁻¹)^{q₃}, (yz⁻¹)^{q₁}, (zx⁻¹)^{q₂}⟩,
//!     with Tet[n,m;q] short for Tet[2,2,n;2,q,m]
//!  6. GTet1[n,m,q]   = ⟨x,y,z | x^n, y^2, (xy)^m, [y,z]^q, [x,z]⟩
//!  7. GTet2[n,m,q]   = ⟨x,y,z | x^n, y^2, (xy)^m, (xz⁻¹y⁻¹zy)^q, [x,z]⟩
//!  8. S2[n,m,q]      = ⟨x,L | x^n, (xLxL⁻¹)^m, (xL²x⁻¹L⁻²)^q⟩
//!  9. S3[n,m,q]      = ⟨x,L | x^n, (xLxL⁻¹)^m, (xLxLxL⁻²)^q⟩
//! 10. R[n,m;q]       = ⟨u,v | (uv)^n, (uv⁻¹)^m, [u,v]^q⟩
//! ```
//!
//! Exponents are integers ≥ 2, `∞`, or `∞̄`. Relators with exponent `∞̄`
//! (hyperbolic elements) are dropped on construction; relators with exponent
//! `∞` (parabolics) survive in the Kleinian form and are dropped by
//! [`Presentation::to_abstract`].
//!
//! Distinct schemas can present isomorphic groups — both `GT[n,inf;barinf]`
//! and `S2[n,inf,inf]` are ℤ_n ∗ ℤ, for instance. No isomorphism testing is
//! attempted here; presentations are emitted as written.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exponent::ExtExp;
use crate::family::FamilyInstance;
use crate::word::Word;

/// Presentation schema, also the group-shape tag of the family table.
/// `Tet` takes the three-slot short form; `Tet6` is the one-parameter
/// family `Tet[2,3,3;2,3,m]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Schema {
    GT,
    PH,
    H,
    P,
    Tet,
    Tet6,
    GTet1,
    GTet2,
    S2,
    S3,
    R,
}

impl Schema {
    pub const ALL: [Schema; 11] = [
        Schema::GT,
        Schema::PH,
        Schema::H,
        Schema::P,
        Schema::Tet,
        Schema::Tet6,
        Schema::GTet1,
        Schema::GTet2,
        Schema::S2,
        Schema::S3,
        Schema::R,
    ];

    /// Number of exponent slots.
    pub fn arity(self) -> usize {
        match self {
            Schema::Tet6 => 1,
            Schema::H => 4,
            _ => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Schema::GT => "GT",
            Schema::PH => "PH",
            Schema::H => "H",
            Schema::P => "P",
            Schema::Tet => "Tet",
            Schema::Tet6 => "Tet6",
            Schema::GTet1 => "GTet1",
            Schema::GTet2 => "GTet2",
            Schema::S2 => "S2",
            Schema::S3 => "S3",
            Schema::R => "R",
        }
    }

    /// Render `Schema[exps]` the way the families are usually written:
    /// `GT[n,m;q]`, `H[p;n,m;q]`, `Tet6[m]` as `Tet[2,3,3;2,3,m]`, etc.
    pub fn display_with(self, exps: &[ExtExp]) -> String {
        let e: Vec<String> = exps.iter().map(|x| x.to_string()).collect();
        match self {
            Schema::GT | Schema::Tet | Schema::R => {
                format!("{}[{},{};{}]", self.name(), e[0], e[1], e[2])
            }
            Schema::H => format!("H[{};{},{};{}]", e[0], e[1], e[2], e[3]),
            Schema::Tet6 => format!("Tet[2,3,3;2,3,{}]", e[0]),
            _ => format!("{}[{}]", self.name(), e.join(",")),
        }
    }
}

impl std::str::FromStr for Schema {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Schema::ALL
            .into_iter()
            .find(|sch| sch.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown schema {s:?}"))
    }
}

impl fmt::Display for Schema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Kleinian form keeps `∞` relators (parabolics indicated); the abstract
/// form has none.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Form {
    Kleinian,
    Abstract,
}

/// A relator `word^exponent`. Fixed commutation relators such as `[x,z]`
/// carry exponent 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Relator {
    pub word: Word,
    pub exponent: ExtExp,
}

impl fmt::Display for Relator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exponent {
            ExtExp::Fin(1) => write!(f, "{}", self.word),
            exp if self.word.letters().len() == 1 && self.word.letters()[0].1 == 1 => {
                write!(f, "{}^{}", self.word, exp)
            }
            exp => write!(f, "({})^{}", self.word, exp),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Presentation {
    pub generators: Vec<char>,
    pub relators: Vec<Relator>,
    pub form: Form,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PresentationError {
    #[error("schema {schema} takes {expected} exponents, got {got}")]
    Arity {
        schema: Schema,
        expected: usize,
        got: usize,
    },
    #[error("slot exponent must be at least 2, got {0}")]
    SmallExponent(u32),
}

fn w(s: &str) -> Word {
    // ascii letter stream with optional ^-1 markers handled by callers; here
    // the schema relators are short enough to write letter by letter
    Word::from_letters(s.chars().map(|c| (c, 1)))
}

fn check_slots(schema: Schema, exps: &[ExtExp]) -> Result<(), PresentationError> {
    if exps.len() != schema.arity() {
        return Err(PresentationError::Arity {
            schema,
            expected: schema.arity(),
            got: exps.len(),
        });
    }
    for e in exps {
        if let ExtExp::Fin(k) = e {
            if *k < 2 {
                return Err(PresentationError::SmallExponent(*k));
            }
        }
    }
    Ok(())
}

/// Build the Kleinian-form presentation for a schema.
///
/// Finite exponents are embedded, `∞` relators kept, `∞̄` relators dropped.
pub fn build(schema: Schema, exps: &[ExtExp]) -> Result<Presentation, PresentationError> {
    check_slots(schema, exps)?;
    let (generators, relators) = match schema {
        Schema::GT => {
            let (n, m, q) = (exps[0], exps[1], exps[2]);
            (
                vec!['f', 'g'],
                vec![
                    (Word::gen('f'), n),
                    (Word::gen('g'), m),
                    (Word::commutator(&Word::gen('f'), &Word::gen('g')), q),
                ],
            )
        }
        Schema::PH => {
            let (n, m, q) = (exps[0], exps[1], exps[2]);
            (
                vec!['x', 'y', 'z'],
                vec![
                    (Word::gen('x'), n),
                    (Word::gen('y'), 2.into()),
                    (Word::gen('z'), 2.into()),
                    (w("xz"), 2.into()),
                    (Word::commutator(&Word::gen('x'), &Word::gen('y')), m),
                    (w("yxyz"), q),
                ],
            )
        }
        Schema::H => {
            let (p, n, m, q) = (exps[0], exps[1], exps[2], exps[3]);
            (
                vec!['x', 'y', 's'],
                vec![
                    (Word::gen('s'), 2.into()),
                    (Word::gen('x'), n),
                    (Word::gen('y'), m),
                    (Word::from_letters([('x', 1), ('y', -1)]), p),
                    (
                        Word::from_letters([('s', 1), ('x', 1), ('s', 1), ('y', -1)]),
                        q,
                    ),
                    (
                        Word::from_letters([('s', 1), ('x', -1), ('y', 1)]),
                        2.into(),
                    ),
                ],
            )
        }
        Schema::P => {
            let (n, m, q) = (exps[0], exps[1], exps[2]);
            (
                vec!['w', 'x', 'y', 'z'],
                vec![
                    (Word::gen('w'), n),
                    (Word::gen('x'), 2.into()),
                    (Word::gen('y'), 2.into()),
                    (Word::gen('z'), 2.into()),
                    (w("wx"), 2.into()),
                    (w("wy"), 2.into()),
                    (w("yz"), 2.into()),
                    (w("zx"), q),
                    (w("zw"), m),
                ],
            )
        }
        Schema::Tet => {
            let (n, m, q) = (exps[0], exps[1], exps[2]);
            return build_tet_full([2.into(), 2.into(), n], [2.into(), q, m]);
        }
        Schema::Tet6 => {
            let m = exps[0];
            return build_tet_full([2.into(), 3.into(), 3.into()], [2.into(), 3.into(), m]);
        }
        Schema::GTet1 => {
            let (n, m, q) = (exps[0], exps[1], exps[2]);
            (
                vec!['x', 'y', 'z'],
                vec![
                    (Word::gen('x'), n),
                    (Word::gen('y'), 2.into()),
                    (w("xy"), m),
                    (Word::commutator(&Word::gen('y'), &Word::gen('z')), q),
                    (Word::commutator(&Word::gen('x'), &Word::gen('z')), 1.into()),
                ],
            )
        }
        Schema::GTet2 => {
            let (n, m, q) = (exps[0], exps[1], exps[2]);
            (
                vec!['x', 'y', 'z'],
                vec![
                    (Word::gen('x'), n),
                    (Word::gen('y'), 2.into()),
                    (w("xy"), m),
                    (
                        Word::from_letters([('x', 1), ('z', -1), ('y', -1), ('z', 1), ('y', 1)]),
                        q,
                    ),
                    (Word::commutator(&Word::gen('x'), &Word::gen('z')), 1.into()),
                ],
            )
        }
        Schema::S2 => {
            let (n, m, q) = (exps[0], exps[1], exps[2]);
            (
                vec!['x', 'L'],
                vec![
                    (Word::gen('x'), n),
                    (
                        Word::from_letters([('x', 1), ('L', 1), ('x', 1), ('L', -1)]),
                        m,
                    ),
                    (
                        Word::from_letters([('x', 1), ('L', 2), ('x', -1), ('L', -2)]),
                        q,
                    ),
                ],
            )
        }
        Schema::S3 => {
            let (n, m, q) = (exps[0], exps[1], exps[2]);
            (
                vec!['x', 'L'],
                vec![
                    (Word::gen('x'), n),
                    (
                        Word::from_letters([('x', 1), ('L', 1), ('x', 1), ('L', -1)]),
                        m,
                    ),
                    (
                        Word::from_letters([
                            ('x', 1),
                            ('L', 1),
                            ('x', 1),
                            ('L', 1),
                            ('x', 1),
                            ('L', -2),
                        ]),
                        q,
                    ),
                ],
            )
        }
        Schema::R => {
            let (n, m, q) = (exps[0], exps[1], exps[2]);
            (
                vec!['u', 'v'],
                vec![
                    (w("uv"), n),
                    (Word::from_letters([('u', 1), ('v', -1)]), m),
                    (Word::commutator(&Word::gen('u'), &Word::gen('v')), q),
                ],
            )
        }
    };
    Ok(assemble(generators, relators))
}

/// The six-slot tetrahedral presentation
/// `⟨x,y,z | x^{p₁}, y^{p₂}, z^{p₃}, (xy⁻¹)^{q₃}, (yz⁻¹)^{q₁}, (zx⁻¹)^{q₂}⟩`.
pub fn build_tet_full(p: [ExtExp; 3], q: [ExtExp; 3]) -> Result<Presentation, PresentationError> {
    for e in p.iter().chain(q.iter()) {
        if let ExtExp::Fin(k) = e {
            if *k < 2 {
                return Err(PresentationError::SmallExponent(*k));
            }
        }
    }
    let relators = vec![
        (Word::gen('x'), p[0]),
        (Word::gen('y'), p[1]),
        (Word::gen('z'), p[2]),
        (Word::from_letters([('x', 1), ('y', -1)]), q[2]),
        (Word::from_letters([('y', 1), ('z', -1)]), q[0]),
        (Word::from_letters([('z', 1), ('x', -1)]), q[1]),
    ];
    Ok(assemble(vec!['x', 'y', 'z'], relators))
}

fn assemble(generators: Vec<char>, relators: Vec<(Word, ExtExp)>) -> Presentation {
    let relators = relators
        .into_iter()
        .filter(|(_, e)| *e != ExtExp::BarInf)
        .map(|(word, exponent)| Relator { word, exponent })
        .collect();
    Presentation {
        generators,
        relators,
        form: Form::Kleinian,
    }
}

impl Presentation {
    /// Drop the `∞` relators, leaving the abstract group presentation.
    /// Idempotent.
    pub fn to_abstract(&self) -> Presentation {
        Presentation {
            generators: self.generators.clone(),
            relators: self
                .relators
                .iter()
                .filter(|r| r.exponent != ExtExp::Inf)
                .cloned()
                .collect(),
            form: Form::Abstract,
        }
    }

    /// Canonical text form `⟨gens | relators⟩`.
    pub fn text(&self) -> String {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        let rels: Vec<String> = self.relators.iter().map(|r| r.to_string()).collect();
        format!("⟨{} | {}⟩", gens.join(","), rels.join(", "))
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.text())
    }
}

/// Relator words over {f, g} whose matrix evaluations must be ±identity,
/// for the families where the generators of the presentation are known
/// words in f and g (the two-elliptic table rows 1–3).
#[derive(Debug, Clone, PartialEq)]
pub enum FgWords {
    Words(Vec<(Word, ExtExp)>),
    /// The auxiliary generators of this schema are not expressible in f, g
    /// with the material at hand.
    Unavailable,
}

/// For rows 1–3 of the family table, the presentation relators written in
/// the generators f, g of the realized pair.
///
/// - Row 1 (GT): `f^n, g^m, [f,g]^q` directly.
/// - Row 2 (`Tet[n,m;p]`, p odd): the relators of `⟨f,g,e⟩` —
///   `f^n, g^m, e², (fe)², (ge)², (gfe)^p` — with
///   `e = f⁻¹g⁻¹ [f,g]^{(p−1)/2}` substituted.
/// - Row 3 (`Tet[3,n;3]`, two elliptic generators of equal order): the
///   relators `f^n, e_f², u², (fe_f)², (ue_f)³, (fu)³` with
///   `u = f [f,g]^{−(n−1)²/4} f` and `e_f = [f,g]^{(n−1)²/2} g`.
pub fn relator_words_in_fg(instance: &FamilyInstance) -> FgWords {
    let f = Word::gen('f');
    let g = Word::gen('g');
    let comm = Word::commutator(&f, &g);
    match instance.id.row {
        1 => {
            let e = &instance.exponents;
            FgWords::Words(vec![(f, e[0]), (g, e[1]), (comm, e[2])])
        }
        2 => {
            let e = &instance.exponents;
            let p = match e[2] {
                ExtExp::Fin(p) => p,
                _ => return FgWords::Unavailable,
            };
            let ew = f
                .inverse()
                .concat(&g.inverse())
                .concat(&comm.pow(((p - 1) / 2) as i32));
            FgWords::Words(vec![
                (f.clone(), e[0]),
                (g.clone(), e[1]),
                (ew.clone(), 2.into()),
                (f.concat(&ew), 2.into()),
                (g.concat(&ew), 2.into()),
                (g.concat(&f).concat(&ew), ExtExp::Fin(p)),
            ])
        }
        3 => {
            // The substitution words hold for the equal-order two-elliptic
            // case, i.e. the instances whose group is Tet[3,n;3].
            if instance.exponents[0] != ExtExp::Fin(3) {
                return FgWords::Unavailable;
            }
            let n = match instance.exponents[1] {
                ExtExp::Fin(n) => n,
                _ => return FgWords::Unavailable,
            };
            let sq = ((n - 1) * (n - 1)) as i32;
            let u = f.concat(&comm.pow(-(sq / 4))).concat(&f);
            let ef = comm.pow(sq / 2).concat(&g);
            FgWords::Words(vec![
                (f.clone(), ExtExp::Fin(n)),
                (ef.clone(), 2.into()),
                (u.clone(), 2.into()),
                (f.concat(&ef), 2.into()),
                (u.concat(&ef), 3.into()),
                (f.concat(&u), 3.into()),
            ])
        }
        _ => FgWords::Unavailable,
    }
}
