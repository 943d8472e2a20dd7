//! Generalized lattice paths: `k`-Dyck, `k`-Motzkin, the two `k`-Schroeder
//! families, and the three-step family counted by `A(n,k,j)`.
//!
//! Words are enumerated exhaustively in lexicographic order under the
//! declared letter order `U < D < H` (`u < U < d` for the A-family).

mod stats;
mod tree;

pub use stats::{path_stats, PathStats};
pub use tree::{dyck_to_tree, tree_statistic_nt, tree_to_dyck, KAryTree, TreeNode};

use crate::error::{Error, Result};

/// The five path families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Dyck,
    Motzkin,
    SchroederA,
    SchroederB,
    AFamily,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Dyck => "dyck",
            Family::Motzkin => "motzkin",
            Family::SchroederA => "schroeder-a",
            Family::SchroederB => "schroeder-b",
            Family::AFamily => "a-family",
        }
    }

    pub fn from_name(name: &str) -> Option<Family> {
        match name {
            "dyck" => Some(Family::Dyck),
            "motzkin" => Some(Family::Motzkin),
            "schroeder-a" => Some(Family::SchroederA),
            "schroeder-b" => Some(Family::SchroederB),
            "a-family" => Some(Family::AFamily),
            _ => None,
        }
    }

    /// Step alphabet in the declared enumeration order.
    pub fn alphabet(self) -> &'static [Step] {
        match self {
            Family::Dyck => &[Step::Up, Step::Down],
            Family::Motzkin => &[Step::Up, Step::Down, Step::Horiz],
            Family::SchroederA | Family::SchroederB => &[Step::Up, Step::Down, Step::Horiz],
            Family::AFamily => &[Step::SmallUp, Step::Up, Step::SmallDown],
        }
    }
}

/// A step letter. `SmallUp`/`SmallDown` are the `u`/`d` letters of the
/// A-family; every other family uses `Up`/`Down`/`Horiz`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Up,
    Down,
    Horiz,
    SmallUp,
    SmallDown,
}

impl Step {
    pub fn letter(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
            Step::Horiz => 'H',
            Step::SmallUp => 'u',
            Step::SmallDown => 'd',
        }
    }

    fn from_letter(c: char) -> Option<Step> {
        match c {
            'U' => Some(Step::Up),
            'D' => Some(Step::Down),
            'H' => Some(Step::Horiz),
            'u' => Some(Step::SmallUp),
            'd' => Some(Step::SmallDown),
            _ => None,
        }
    }

    /// Displacement of the step in the given family with parameter `k`.
    pub fn delta(self, family: Family, k: u32) -> (i64, i64) {
        let k = i64::from(k);
        match family {
            Family::Dyck | Family::SchroederA | Family::SchroederB => match self {
                Step::Up => (0, 1),
                Step::Down => (1, 0),
                Step::Horiz if family == Family::SchroederA => (k, 1),
                Step::Horiz => (1, 1),
                _ => unreachable!("letter not in family alphabet"),
            },
            Family::Motzkin => match self {
                Step::Up => (1, k),
                Step::Down => (1, -1),
                Step::Horiz => (1, 0),
                _ => unreachable!("letter not in family alphabet"),
            },
            Family::AFamily => match self {
                Step::SmallUp => (k, 1),
                Step::Up => (1, k),
                Step::SmallDown => (1, -1),
                _ => unreachable!("letter not in family alphabet"),
            },
        }
    }
}

/// A validated lattice path: a step word plus its family tag and `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    family: Family,
    k: u32,
    word: Vec<Step>,
}

impl LatticePath {
    /// Validate a word against its family geometry and wrap it.
    pub fn new(family: Family, k: u32, word: Vec<Step>) -> Result<Self> {
        if k < 1 {
            return Err(Error::OutOfDomain("k must be at least 1".into()));
        }
        validate(family, k, &word)?;
        Ok(LatticePath { family, k, word })
    }

    /// Parse a word like `"UDUDDD"`.
    pub fn parse(family: Family, k: u32, word: &str) -> Result<Self> {
        let steps = word
            .chars()
            .map(|c| {
                Step::from_letter(c).ok_or_else(|| Error::InvalidWord {
                    family: family.name(),
                    word: word.to_string(),
                    reason: format!("unknown letter {c:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(family, k, steps)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn steps(&self) -> &[Step] {
        &self.word
    }

    pub fn word_string(&self) -> String {
        self.word.iter().map(|s| s.letter()).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Path size `n`: up steps for Dyck, total steps for Motzkin, height
    /// for the Schroeder families, `#u + #U` for the A-family.
    pub fn size(&self) -> usize {
        match self.family {
            Family::Dyck => self.count(Step::Up),
            Family::Motzkin => self.word.len(),
            Family::SchroederA | Family::SchroederB => {
                self.count(Step::Up) + self.count(Step::Horiz)
            }
            Family::AFamily => self.count(Step::SmallUp) + self.count(Step::Up),
        }
    }

    pub fn count(&self, step: Step) -> usize {
        self.word.iter().filter(|&&s| s == step).count()
    }
}

fn validate(family: Family, k: u32, word: &[Step]) -> Result<()> {
    let fail = |reason: String| Error::InvalidWord {
        family: family.name(),
        word: word.iter().map(|s| s.letter()).collect(),
        reason,
    };
    let allowed = family.alphabet();
    let mut x = 0i64;
    let mut y = 0i64;
    let mut prev: Option<Step> = None;
    for &st in word {
        if !allowed.contains(&st) {
            return Err(fail(format!("letter {:?} not in family alphabet", st.letter())));
        }
        let (dx, dy) = st.delta(family, k);
        x += dx;
        y += dy;
        match family {
            Family::Dyck | Family::SchroederA | Family::SchroederB => {
                if x > i64::from(k) * y {
                    return Err(fail(format!("drops below y = x/{k} at ({x}, {y})")));
                }
            }
            Family::Motzkin | Family::AFamily => {
                if y < 0 {
                    return Err(fail(format!("leaves the first quadrant at ({x}, {y})")));
                }
            }
        }
        if family == Family::AFamily
            && prev == Some(Step::SmallUp)
            && st == Step::SmallDown
        {
            return Err(fail("contains the forbidden peak ud".into()));
        }
        prev = Some(st);
    }
    // endpoint consistency
    match family {
        Family::Dyck | Family::SchroederA | Family::SchroederB => {
            if x != i64::from(k) * y {
                return Err(fail(format!("ends at ({x}, {y}), not on y = x/{k}")));
            }
        }
        Family::Motzkin | Family::AFamily => {
            if y != 0 {
                return Err(fail(format!("ends at height {y}, not on the axis")));
            }
            if family == Family::AFamily && x % (i64::from(k) + 1) != 0 {
                return Err(fail(format!("width {x} is not a multiple of k+1")));
            }
        }
    }
    Ok(())
}

/// Exhaustively enumerate the family of size `n`, lexicographically ordered
/// by word under the declared letter order. Size 0 yields the empty path.
pub fn enum_paths(family: Family, n: usize, k: u32) -> Result<Vec<LatticePath>> {
    if k < 1 {
        return Err(Error::OutOfDomain("k must be at least 1".into()));
    }
    let mut out = Vec::new();
    let mut word: Vec<Step> = Vec::new();
    match family {
        Family::Dyck => enum_dyck(n, k, &mut word, 0, 0, &mut out),
        Family::Motzkin => enum_motzkin(n, k, &mut word, 0, 0, &mut out),
        Family::SchroederA | Family::SchroederB => {
            enum_schroeder(family, n, k, &mut word, 0, 0, &mut out)
        }
        Family::AFamily => enum_afamily(n, k, &mut word, 0, 0, &mut out),
    }
    Ok(out
        .into_iter()
        .map(|word| LatticePath { family, k, word })
        .collect())
}

fn enum_dyck(n: usize, k: u32, word: &mut Vec<Step>, nu: usize, nd: usize, out: &mut Vec<Vec<Step>>) {
    if nu == n && nd == n * k as usize {
        out.push(word.clone());
        return;
    }
    if nu < n {
        word.push(Step::Up);
        enum_dyck(n, k, word, nu + 1, nd, out);
        word.pop();
    }
    if nd < nu * k as usize {
        word.push(Step::Down);
        enum_dyck(n, k, word, nu, nd + 1, out);
        word.pop();
    }
}

fn enum_motzkin(n: usize, k: u32, word: &mut Vec<Step>, x: usize, y: i64, out: &mut Vec<Vec<Step>>) {
    if x == n {
        if y == 0 {
            out.push(word.clone());
        }
        return;
    }
    let rem = (n - x) as i64;
    // a return needs one down step per height unit
    if y + i64::from(k) < rem {
        word.push(Step::Up);
        enum_motzkin(n, k, word, x + 1, y + i64::from(k), out);
        word.pop();
    }
    if y >= 1 {
        word.push(Step::Down);
        enum_motzkin(n, k, word, x + 1, y - 1, out);
        word.pop();
    }
    if y < rem {
        word.push(Step::Horiz);
        enum_motzkin(n, k, word, x + 1, y, out);
        word.pop();
    }
}

fn enum_schroeder(
    family: Family,
    n: usize,
    k: u32,
    word: &mut Vec<Step>,
    x: i64,
    y: i64,
    out: &mut Vec<Vec<Step>>,
) {
    let kk = i64::from(k);
    let n = n as i64;
    if y == n && x == kk * n {
        out.push(word.clone());
        return;
    }
    if y < n {
        word.push(Step::Up);
        enum_schroeder(family, n as usize, k, word, x, y + 1, out);
        word.pop();
    }
    if x < kk * y {
        word.push(Step::Down);
        enum_schroeder(family, n as usize, k, word, x + 1, y, out);
        word.pop();
    }
    let hdx = if family == Family::SchroederA { kk } else { 1 };
    if y < n && x + hdx <= kk * (y + 1) {
        word.push(Step::Horiz);
        enum_schroeder(family, n as usize, k, word, x + hdx, y + 1, out);
        word.pop();
    }
}

fn enum_afamily(n: usize, k: u32, word: &mut Vec<Step>, x: i64, y: i64, out: &mut Vec<Vec<Step>>) {
    let kk = i64::from(k);
    let width = (kk + 1) * n as i64;
    if x == width {
        if y == 0 {
            out.push(word.clone());
        }
        return;
    }
    if x + kk <= width {
        word.push(Step::SmallUp);
        enum_afamily(n, k, word, x + kk, y + 1, out);
        word.pop();
    }
    if x < width {
        word.push(Step::Up);
        enum_afamily(n, k, word, x + 1, y + kk, out);
        word.pop();
    }
    if y >= 1 && x < width && word.last() != Some(&Step::SmallUp) {
        word.push(Step::SmallDown);
        enum_afamily(n, k, word, x + 1, y - 1, out);
        word.pop();
    }
}

/// Split a `k`-Dyck path into its prime factors (paths touching `y = x/k`
/// only at their endpoints). Concatenating the factors recovers the input.
pub fn prime_decompose(path: &LatticePath) -> Result<Vec<LatticePath>> {
    if path.family != Family::Dyck {
        return Err(Error::WrongFamily {
            expected: "dyck",
            got: path.family.name(),
        });
    }
    let k = path.k;
    let mut out = Vec::new();
    let mut height = 0i64;
    let mut start = 0usize;
    for (i, &st) in path.word.iter().enumerate() {
        height += match st {
            Step::Up => i64::from(k),
            _ => -1,
        };
        if height == 0 {
            out.push(LatticePath {
                family: Family::Dyck,
                k,
                word: path.word[start..=i].to_vec(),
            });
            start = i + 1;
        }
    }
    Ok(out)
}

/// Is the path prime (touches `y = x/k` only at its endpoints)?
pub fn is_prime(path: &LatticePath) -> Result<bool> {
    Ok(prime_decompose(path)?.len() == 1)
}

/// Decompose a nonempty `k`-Dyck word as `U w_1 D w_2 D ... w_k D w_{k+1}`
/// and return the `k+1` component words. The path is prime exactly when the
/// last component is empty.
pub(crate) fn decompose_first(word: &[Step], k: u32) -> Vec<Vec<Step>> {
    debug_assert_eq!(word[0], Step::Up);
    let mut comps = Vec::with_capacity(k as usize + 1);
    let mut i = 1usize;
    for _ in 0..k {
        let mut h = 0i64;
        let start = i;
        loop {
            match word[i] {
                Step::Up => h += i64::from(k),
                _ if h > 0 => h -= 1,
                _ => break,
            }
            i += 1;
        }
        comps.push(word[start..i].to_vec());
        i += 1; // the separating down step
    }
    comps.push(word[i..].to_vec());
    comps
}

/// The component decomposition `U w_1 D w_2 D ... w_k D w_{k+1}` of a
/// nonempty `k`-Dyck path, as `k+1` paths.
pub fn dyck_components(path: &LatticePath) -> Result<Vec<LatticePath>> {
    if path.family != Family::Dyck {
        return Err(Error::WrongFamily {
            expected: "dyck",
            got: path.family.name(),
        });
    }
    if path.is_empty() {
        return Err(Error::OutOfDomain(
            "the empty path has no decomposition".into(),
        ));
    }
    Ok(decompose_first(&path.word, path.k)
        .into_iter()
        .map(|word| LatticePath {
            family: Family::Dyck,
            k: path.k,
            word,
        })
        .collect())
}

/// Replace every `H` of a type-B Schroeder path by `UD`, producing the
/// `k`-Dyck path of the same size.
pub fn schb_lift(path: &LatticePath) -> Result<LatticePath> {
    if path.family != Family::SchroederB {
        return Err(Error::WrongFamily {
            expected: "schroeder-b",
            got: path.family.name(),
        });
    }
    let mut word = Vec::with_capacity(path.word.len() + path.count(Step::Horiz));
    for &st in &path.word {
        match st {
            Step::Horiz => {
                word.push(Step::Up);
                word.push(Step::Down);
            }
            other => word.push(other),
        }
    }
    LatticePath::new(Family::Dyck, path.k, word)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(family: Family, n: usize, k: u32) -> Vec<String> {
        enum_paths(family, n, k)
            .unwrap()
            .iter()
            .map(LatticePath::word_string)
            .collect()
    }

    #[test]
    fn dyck_2_2_listing() {
        // lexicographic under U < D: the highest path sorts first
        assert_eq!(words(Family::Dyck, 2, 2), ["UUDDDD", "UDUDDD", "UDDUDD"]);
    }

    #[test]
    fn schroeder_b_2_2_listing() {
        let got = words(Family::SchroederB, 2, 2);
        assert_eq!(got.len(), 10);
        for w in [
            "UDDUDD", "HDUDD", "UDDHD", "HDHD", "UDUDDD", "HUDDD", "UDHDD", "HHDD", "UUDDDD",
            "UHDDD",
        ] {
            assert!(got.contains(&w.to_string()), "missing {w}");
        }
    }

    #[test]
    fn schroeder_a_2_2_listing() {
        let got = words(Family::SchroederA, 2, 2);
        assert_eq!(got.len(), 8);
        for w in [
            "HH", "HUDD", "UHDD", "UDHD", "UDDH", "UDDUDD", "UDUDDD", "UUDDDD",
        ] {
            assert!(got.contains(&w.to_string()), "missing {w}");
        }
    }

    #[test]
    fn motzkin_5_2_listing() {
        let got = words(Family::Motzkin, 5, 2);
        assert_eq!(got.len(), 11);
        for w in [
            "HHHHH", "UDDHH", "UDHDH", "UHDDH", "HUDDH", "UDHHD", "UHDHD", "HUDHD", "UHHDD",
            "HUHDD", "HHUDD",
        ] {
            assert!(got.contains(&w.to_string()), "missing {w}");
        }
    }

    #[test]
    fn motzkin_3_1_listing() {
        let got = words(Family::Motzkin, 3, 1);
        assert_eq!(got.len(), 4);
        for w in ["HHH", "UDH", "UHD", "HUD"] {
            assert!(got.contains(&w.to_string()), "missing {w}");
        }
    }

    #[test]
    fn schroeder_classic_size_2() {
        let got = words(Family::SchroederB, 2, 1);
        assert_eq!(got.len(), 6);
        for w in ["HH", "HUD", "UHD", "UDH", "UUDD", "UDUD"] {
            assert!(got.contains(&w.to_string()), "missing {w}");
        }
        // for k = 1 both Schroeder types give the same set
        let a = words(Family::SchroederA, 2, 1);
        let mut b = got.clone();
        b.sort();
        let mut a2 = a;
        a2.sort();
        assert_eq!(a2, b);
    }

    #[test]
    fn size_zero_is_single_empty_path() {
        for family in [
            Family::Dyck,
            Family::Motzkin,
            Family::SchroederA,
            Family::SchroederB,
            Family::AFamily,
        ] {
            let got = enum_paths(family, 0, 2).unwrap();
            assert_eq!(got.len(), 1);
            assert!(got[0].is_empty());
        }
    }

    #[test]
    fn enumeration_is_sorted_and_valid() {
        for (family, n, k) in [
            (Family::Dyck, 4, 2),
            (Family::Motzkin, 6, 2),
            (Family::SchroederA, 3, 2),
            (Family::SchroederB, 3, 3),
            (Family::AFamily, 3, 2),
        ] {
            let got = enum_paths(family, n, k).unwrap();
            for p in &got {
                LatticePath::new(family, k, p.steps().to_vec()).unwrap();
                assert_eq!(p.size(), n, "{}", p.word_string());
            }
            let ws: Vec<Vec<usize>> = got
                .iter()
                .map(|p| {
                    p.steps()
                        .iter()
                        .map(|s| family.alphabet().iter().position(|a| a == s).unwrap())
                        .collect()
                })
                .collect();
            for pair in ws.windows(2) {
                assert!(pair[0] < pair[1], "not strictly increasing");
            }
        }
    }

    #[test]
    fn rejects_bad_words_and_bad_k() {
        assert!(LatticePath::parse(Family::Dyck, 2, "UD").is_err()); // wrong endpoint
        assert!(LatticePath::parse(Family::Dyck, 2, "DU").is_err()); // below boundary
        assert!(LatticePath::parse(Family::Dyck, 2, "UDD").is_ok()); // Dyck(1;2)
        assert!(LatticePath::parse(Family::Motzkin, 1, "UDD").is_err());
        assert!(LatticePath::parse(Family::AFamily, 2, "udUdd").is_err()); // ud peak
        assert!(enum_paths(Family::Dyck, 2, 0).is_err());
    }

    #[test]
    fn prime_decomposition_examples() {
        let p = LatticePath::parse(Family::Dyck, 2, "UDDUDD").unwrap();
        let factors = prime_decompose(&p).unwrap();
        assert_eq!(
            factors.iter().map(|f| f.word_string()).collect::<Vec<_>>(),
            ["UDD", "UDD"]
        );

        let p = LatticePath::parse(Family::Dyck, 2, "UDUDDD").unwrap();
        assert!(is_prime(&p).unwrap());
        assert_eq!(prime_decompose(&p).unwrap().len(), 1);

        let empty = LatticePath::new(Family::Dyck, 2, vec![]).unwrap();
        assert!(prime_decompose(&empty).unwrap().is_empty());

        let sch = LatticePath::parse(Family::SchroederB, 2, "HDHD").unwrap();
        assert!(prime_decompose(&sch).is_err());
    }

    #[test]
    fn prime_factors_reconcatenate() {
        for (n, k) in [(4, 1), (4, 2), (3, 3)] {
            for p in enum_paths(Family::Dyck, n, k).unwrap() {
                let factors = prime_decompose(&p).unwrap();
                let glued: String = factors.iter().map(|f| f.word_string()).collect();
                assert_eq!(glued, p.word_string());
                for f in &factors {
                    assert!(is_prime(f).unwrap());
                }
            }
        }
    }

    #[test]
    fn lift_examples() {
        let p = LatticePath::parse(Family::SchroederB, 2, "HDHD").unwrap();
        assert_eq!(schb_lift(&p).unwrap().word_string(), "UDDUDD");
        let p = LatticePath::parse(Family::SchroederB, 2, "UHDDD").unwrap();
        assert_eq!(schb_lift(&p).unwrap().word_string(), "UUDDDD");
        let p = LatticePath::parse(Family::SchroederB, 2, "UDDUDD").unwrap();
        assert_eq!(schb_lift(&p).unwrap().word_string(), "UDDUDD");
    }

    #[test]
    fn afamily_size_one() {
        // only Ud^k survives; ud is cut by the pattern condition
        let got = words(Family::AFamily, 1, 2);
        assert_eq!(got, ["Udd"]);
    }
}
