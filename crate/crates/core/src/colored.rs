//! Coloured partitions over the alphabet {1̄, 2, 2̄, ..., a, ā, (a+1)‾}:
//! one barred copy of 1, barred and unbarred copies of 2..=a, and a barred
//! copy of a+1. A symbol's weight is its numeral; a coloured partition is
//! a multiset of symbols, its size the total weight.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// One alphabet symbol. `Barred(j)` is legal for 1 <= j <= a+1,
/// `Unbarred(j)` for 2 <= j <= a.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ColorSymbol {
    Unbarred(usize),
    Barred(usize),
}

impl ColorSymbol {
    pub fn weight(self) -> usize {
        match self {
            ColorSymbol::Unbarred(j) | ColorSymbol::Barred(j) => j,
        }
    }

    pub fn is_barred(self) -> bool {
        matches!(self, ColorSymbol::Barred(_))
    }

    fn valid_for(self, a: usize) -> bool {
        match self {
            ColorSymbol::Barred(j) => 1 <= j && j <= a + 1,
            ColorSymbol::Unbarred(j) => 2 <= j && j <= a,
        }
    }

    /// Canonical order: weight descending, barred before unbarred. This is
    /// the order symbols appear in listings and in enumeration.
    fn sort_key(self) -> (usize, usize) {
        (
            usize::MAX - self.weight(),
            if self.is_barred() { 0 } else { 1 },
        )
    }
}

impl fmt::Display for ColorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColorSymbol::Unbarred(j) => write!(f, "{}", j),
            ColorSymbol::Barred(j) => write!(f, "{}\u{0304}", j),
        }
    }
}

/// The full alphabet for a given `a`, in canonical order.
pub fn alphabet(a: usize) -> Vec<ColorSymbol> {
    let mut syms = vec![ColorSymbol::Barred(a + 1)];
    for j in (2..=a).rev() {
        syms.push(ColorSymbol::Barred(j));
        syms.push(ColorSymbol::Unbarred(j));
    }
    syms.push(ColorSymbol::Barred(1));
    syms
}

/// A multiset of alphabet symbols.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ColoredPartition {
    a: usize,
    // keyed by (weight, barredness) sort key so iteration is canonical
    mults: BTreeMap<(usize, usize), (ColorSymbol, usize)>,
}

impl ColoredPartition {
    pub fn empty(a: usize) -> Self {
        ColoredPartition {
            a,
            mults: BTreeMap::new(),
        }
    }

    pub fn from_multiplicities(a: usize, mults: &[(ColorSymbol, usize)]) -> Result<Self> {
        let mut cp = ColoredPartition::empty(a);
        for &(sym, m) in mults {
            if !sym.valid_for(a) {
                return Err(Error::InvalidParameter(format!(
                    "symbol {} is not in the alphabet for a = {}",
                    sym, a
                )));
            }
            if m > 0 {
                let e = cp.mults.entry(sym.sort_key()).or_insert((sym, 0));
                e.1 += m;
            }
        }
        Ok(cp)
    }

    pub fn from_symbols(a: usize, symbols: &[ColorSymbol]) -> Result<Self> {
        let pairs: Vec<_> = symbols.iter().map(|&s| (s, 1)).collect();
        ColoredPartition::from_multiplicities(a, &pairs)
    }

    pub fn alphabet_param(&self) -> usize {
        self.a
    }

    /// Multiplicity of a symbol (0 if absent).
    pub fn multiplicity(&self, sym: ColorSymbol) -> usize {
        self.mults.get(&sym.sort_key()).map_or(0, |e| e.1)
    }

    /// Total weight k = sum of multiplicity * weight.
    pub fn size(&self) -> usize {
        self.mults
            .values()
            .map(|&(sym, m)| sym.weight() * m)
            .sum()
    }

    /// Number of parts counted with multiplicity.
    pub fn num_parts(&self) -> usize {
        self.mults.values().map(|e| e.1).sum()
    }

    /// (symbol, multiplicity) pairs in canonical order.
    pub fn entries(&self) -> impl Iterator<Item = (ColorSymbol, usize)> + '_ {
        self.mults.values().copied()
    }
}

impl fmt::Display for ColoredPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        let mut first = true;
        for (sym, m) in self.entries() {
            for _ in 0..m {
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{}", sym)?;
                first = false;
            }
        }
        write!(f, ")")
    }
}

impl fmt::Debug for ColoredPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ColoredPartition[a={}]{}", self.a, self)
    }
}

/// All coloured partitions of weight `k` over the alphabet for `a`.
///
/// `bound`, when given, is the modulus L: each symbol of weight j may then
/// appear with multiplicity strictly less than L/j (with j | L expected, as
/// for L = lcm(1..=a+1)).
///
/// Symbols are tried in canonical order with larger multiplicities first,
/// so output order is deterministic.
pub fn colored_partitions_of(k: usize, a: usize, bound: Option<usize>) -> Result<Vec<ColoredPartition>> {
    if a == 0 {
        return Err(Error::InvalidParameter(
            "alphabet parameter a must be at least 1".into(),
        ));
    }
    let syms = alphabet(a);
    let mut out = Vec::new();
    let mut acc: Vec<(ColorSymbol, usize)> = Vec::new();
    fn rec(
        remaining: usize,
        idx: usize,
        a: usize,
        syms: &[ColorSymbol],
        bound: Option<usize>,
        acc: &mut Vec<(ColorSymbol, usize)>,
        out: &mut Vec<ColoredPartition>,
    ) {
        if remaining == 0 {
            out.push(ColoredPartition::from_multiplicities(a, acc).expect("symbols are valid"));
            return;
        }
        if idx == syms.len() {
            return;
        }
        let sym = syms[idx];
        let w = sym.weight();
        let mut cap = remaining / w;
        if let Some(l) = bound {
            // multiplicity strictly below L/w
            cap = cap.min((l / w).saturating_sub(1));
        }
        for m in (0..=cap).rev() {
            if m > 0 {
                acc.push((sym, m));
            }
            rec(remaining - m * w, idx + 1, a, syms, bound, acc, out);
            if m > 0 {
                acc.pop();
            }
        }
    }
    rec(k, 0, a, &syms, bound, &mut acc, &mut out);
    Ok(out)
}
