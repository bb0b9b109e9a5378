//! Braid words, band presentations and positivity certificates.
//!
//! A letter `+i` stands for the generator `σ_i` and `-i` for its inverse.
//! Closures are trace closures: strand `p` at the right end of the word is
//! joined to strand `p` at the left end.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("generator {letter} out of range for {strands} strands")]
    GeneratorOutOfRange { letter: i32, strands: usize },
    #[error("band indices ({i}, {j}) out of range for {strands} strands")]
    BandOutOfRange { i: usize, j: usize, strands: usize },
    #[error("a braid needs at least one strand")]
    NoStrands,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        for &l in &letters {
            check_letter(l, strands)?;
        }
        Ok(Self { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sum of letter signs; the writhe of the closure diagram.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }

    /// Permutation induced on strand positions together with the number of
    /// components of the closure.
    ///
    /// `perm[p]` is the position at the right end of the strand entering at
    /// position `p` (0-based).
    pub fn closure_components(&self) -> (Vec<usize>, usize) {
        // pos_of[s]: current position of the strand that started at s
        let mut at: Vec<usize> = (0..self.strands).collect(); // at[pos] = start strand
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &start) in at.iter().enumerate() {
            perm[start] = pos;
        }
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for s in 0..self.strands {
            if seen[s] {
                continue;
            }
            cycles += 1;
            let mut p = s;
            while !seen[p] {
                seen[p] = true;
                p = perm[p];
            }
        }
        (perm, cycles)
    }

    pub fn is_knot(&self) -> bool {
        self.closure_components().1 == 1
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(self.strands, other.strands, "strand counts differ");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { strands: self.strands, letters }
    }

    /// Positive (`+1`) or negative (`-1`) Markov stabilisation: adds a
    /// strand and appends `σ_n^{±1}`.
    pub fn stabilized(&self, sign: i32) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.push(sign.signum() * self.strands as i32);
        BraidWord { strands: self.strands + 1, letters }
    }
}

fn check_letter(letter: i32, strands: usize) -> Result<(), BraidError> {
    let g = letter.unsigned_abs() as usize;
    if letter == 0 || g >= strands {
        return Err(BraidError::GeneratorOutOfRange { letter, strands });
    }
    Ok(())
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.strands)?;
        let body: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        writeln!(f, "{}", body.join(" "))
    }
}

/// Parse the `.braid` format: `n=<int>` followed by a line of nonzero
/// integers. Blank lines and `#` comments are ignored.
pub fn parse_braid(text: &str) -> Result<BraidWord, BraidError> {
    let mut lines = content_lines(text);
    let (line_no, header) =
        lines.next().ok_or(BraidError::Parse { line: 1, msg: "missing `n=<int>` header".into() })?;
    let strands = parse_header(line_no, header)?;
    let mut letters = Vec::new();
    for (line_no, line) in lines {
        for tok in line.split_whitespace() {
            let l: i32 =
                tok.parse().map_err(|_| BraidError::Parse { line: line_no, msg: format!("bad letter `{tok}`") })?;
            letters.push(l);
        }
    }
    BraidWord::new(strands, letters)
}

impl FromStr for BraidWord {
    type Err = BraidError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_braid(s)
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn parse_header(line: usize, header: &str) -> Result<usize, BraidError> {
    let n = header
        .strip_prefix("n=")
        .and_then(|v| v.trim().parse::<usize>().ok())
        .ok_or_else(|| BraidError::Parse { line, msg: format!("expected `n=<int>`, got `{header}`") })?;
    if n == 0 {
        return Err(BraidError::NoStrands);
    }
    Ok(n)
}

/// A positive band `w σ_g w⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Band {
    /// `σ_{i,j} = (σ_i ⋯ σ_{j-2}) σ_{j-1} (σ_i ⋯ σ_{j-2})⁻¹`, `1 ≤ i < j ≤ n`.
    Embedded {
        i: usize,
        j: usize,
    },
    Conjugated {
        conjugator: Vec<i32>,
        generator: usize,
    },
}

impl Band {
    pub fn expand(&self) -> Vec<i32> {
        let (w, g) = match self {
            Band::Embedded { i, j } => (((*i as i32)..(*j as i32 - 1)).collect::<Vec<_>>(), *j - 1),
            Band::Conjugated { conjugator, generator } => (conjugator.clone(), *generator),
        };
        let mut out = w.clone();
        out.push(g as i32);
        out.extend(w.iter().rev().map(|l| -l));
        out
    }

    /// True when the expansion is letter-for-letter that of some `σ_{i,j}`.
    pub fn is_embedded(&self) -> bool {
        match self {
            Band::Embedded { .. } => true,
            Band::Conjugated { conjugator, generator } => {
                let Some(&first) = conjugator.first() else {
                    return true;
                };
                if first <= 0 {
                    return false;
                }
                let i = first as usize;
                let j = *generator + 1;
                j > i && Band::Embedded { i, j }.expand() == self.expand()
            }
        }
    }

    fn check(&self, strands: usize) -> Result<(), BraidError> {
        match self {
            Band::Embedded { i, j } => {
                if *i < 1 || i >= j || *j > strands {
                    return Err(BraidError::BandOutOfRange { i: *i, j: *j, strands });
                }
            }
            Band::Conjugated { conjugator, generator } => {
                check_letter(*generator as i32, strands)?;
                for &l in conjugator {
                    check_letter(l, strands)?;
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BandPresentation {
    strands: usize,
    bands: Vec<Band>,
}

impl BandPresentation {
    pub fn new(strands: usize, bands: Vec<Band>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        for b in &bands {
            b.check(strands)?;
        }
        Ok(Self { strands, bands })
    }

    /// Every letter of a braid word read as a band; only meaningful as a
    /// certificate when the word is positive.
    pub fn from_positive_word(word: &BraidWord) -> Option<Self> {
        let bands = word
            .letters()
            .iter()
            .map(|&l| (l > 0).then_some(Band::Embedded { i: l as usize, j: l as usize + 1 }))
            .collect::<Option<Vec<_>>>()?;
        Some(Self { strands: word.strands(), bands })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn bands(&self) -> &[Band] {
        &self.bands
    }

    /// Concatenation of the band expansions, without cancellation.
    pub fn expand(&self) -> BraidWord {
        let letters = self.bands.iter().flat_map(|b| b.expand()).collect();
        BraidWord { strands: self.strands, letters }
    }

    /// Rudolph's formula for quasipositive closures: `χ₄ = n − k`.
    pub fn chi4(&self) -> i64 {
        self.strands as i64 - self.bands.len() as i64
    }
}

impl fmt::Display for BandPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.strands)?;
        for b in &self.bands {
            match b {
                Band::Embedded { i, j } => writeln!(f, "emb {i} {j}")?,
                Band::Conjugated { conjugator, generator } => {
                    let w: Vec<String> = conjugator.iter().map(|l| l.to_string()).collect();
                    writeln!(f, "band g={generator} w={}", w.join(" "))?
                }
            }
        }
        Ok(())
    }
}

/// Parse the `.bands` format: `n=<int>` then lines `emb <i> <j>` or
/// `band g=<i> w=<ints>`.
pub fn parse_bands(text: &str) -> Result<BandPresentation, BraidError> {
    let mut lines = content_lines(text);
    let (line_no, header) =
        lines.next().ok_or(BraidError::Parse { line: 1, msg: "missing `n=<int>` header".into() })?;
    let strands = parse_header(line_no, header)?;
    let mut bands = Vec::new();
    for (line, text) in lines {
        let bad = |msg: String| BraidError::Parse { line, msg };
        let mut toks = text.split_whitespace();
        match toks.next() {
            Some("emb") => {
                let nums: Vec<usize> =
                    toks.map(|t| t.parse().map_err(|_| bad(format!("bad index `{t}`")))).collect::<Result<_, _>>()?;
                let [i, j] = nums[..] else {
                    return Err(bad("`emb` takes two indices".into()));
                };
                bands.push(Band::Embedded { i, j });
            }
            Some("band") => {
                let rest = text["band".len()..].trim();
                let g_part = rest.strip_prefix("g=").ok_or_else(|| bad("expected `g=<int>`".into()))?;
                let (g_str, w_str) = match g_part.split_once("w=") {
                    Some((g, w)) => (g.trim(), w.trim()),
                    None => (g_part.trim(), ""),
                };
                let generator: usize = g_str.parse().map_err(|_| bad(format!("bad generator `{g_str}`")))?;
                let conjugator = w_str
                    .split_whitespace()
                    .map(|t| t.parse::<i32>().map_err(|_| bad(format!("bad letter `{t}`"))))
                    .collect::<Result<Vec<_>, _>>()?;
                bands.push(Band::Conjugated { conjugator, generator });
            }
            Some(other) => return Err(bad(format!("unknown band kind `{other}`"))),
            None => {}
        }
    }
    BandPresentation::new(strands, bands)
}

impl FromStr for BandPresentation {
    type Err = BraidError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_bands(s)
    }
}

/// Levels of the positivity hierarchy, strongest first. A certificate at
/// one level implies membership at every weaker level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum HierarchyLevel {
    BraidPositive,
    Positive,
    StronglyQuasiPositive,
    QuasiPositive,
    NoCertificate,
}

impl HierarchyLevel {
    /// Whether a certificate at `self` also certifies `weaker`.
    pub fn implies(self, weaker: HierarchyLevel) -> bool {
        self != HierarchyLevel::NoCertificate && self <= weaker
    }

    pub fn label(self) -> &'static str {
        match self {
            HierarchyLevel::BraidPositive => "BraidPositive",
            HierarchyLevel::Positive => "Positive",
            HierarchyLevel::StronglyQuasiPositive => "StronglyQuasiPositive",
            HierarchyLevel::QuasiPositive => "QuasiPositive",
            HierarchyLevel::NoCertificate => "NoCertificate",
        }
    }
}

impl fmt::Display for HierarchyLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Something a positivity certificate can be read off.
pub enum Certificate<'a> {
    Word(&'a BraidWord),
    Bands(&'a BandPresentation),
}

/// Classifies the certificate itself, not the knot type it presents.
pub fn classify_certificate(c: Certificate<'_>) -> HierarchyLevel {
    match c {
        Certificate::Word(w) => {
            if w.letters().iter().all(|&l| l > 0) {
                HierarchyLevel::BraidPositive
            } else {
                HierarchyLevel::NoCertificate
            }
        }
        Certificate::Bands(p) => {
            if p.expand().letters().iter().all(|&l| l > 0) {
                HierarchyLevel::BraidPositive
            } else if p.bands().iter().all(Band::is_embedded) {
                HierarchyLevel::StronglyQuasiPositive
            } else {
                HierarchyLevel::QuasiPositive
            }
        }
    }
}
