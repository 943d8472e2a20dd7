//! Path statistics: size, doubled area, peak and valley counts, and the
//! `d` statistic of type-B Schroeder paths.

use super::{schb_lift, Family, LatticePath, Step};

/// Statistics of a single path.
///
/// `area2` is twice the area `|Y(mu_0/mu)|` between the path and the lowest
/// path of its family, so that the half-integer areas of type-B Schroeder
/// paths stay integral. For Dyck, Motzkin and type-A Schroeder paths the
/// area is a whole number of boxes and `area2` is even.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathStats {
    pub size: usize,
    pub area2: u64,
    /// Occurrences of the pattern `UD`.
    pub peaks: usize,
    /// Occurrences of the pattern `UD^k`.
    pub peaks_k: usize,
    /// Occurrences of the pattern `DU`.
    pub valleys: usize,
    /// Valleys whose size (maximal run `D^p` before the `U`) lies in `1..k`.
    pub val2_k: usize,
    pub n_h: usize,
    pub n_u: usize,
    /// `Area(lift) + n - N(H)`; type-B Schroeder paths only.
    pub d_stat: Option<u64>,
}

/// Compute every statistic of a valid path.
pub fn path_stats(path: &LatticePath) -> PathStats {
    let k = path.k();
    let word = path.steps();
    let n = path.size();

    let peaks = count_pattern(word, Step::Up, Step::Down, 1);
    let peaks_k = count_pattern(word, Step::Up, Step::Down, k as usize);
    let (valleys, val2_k) = valley_counts(word, k);

    let d_stat = if path.family() == Family::SchroederB {
        let lifted = schb_lift(path).expect("validated type-B path lifts");
        let area = dyck_area(lifted.steps(), k);
        Some(area + n as u64 - path.count(Step::Horiz) as u64)
    } else {
        None
    };

    PathStats {
        size: n,
        area2: area2(path),
        peaks,
        peaks_k,
        valleys,
        val2_k,
        n_h: path.count(Step::Horiz),
        n_u: path.count(Step::Up),
        d_stat,
    }
}

/// Occurrences of `first` followed by at least `run` copies of `second`.
fn count_pattern(word: &[Step], first: Step, second: Step, run: usize) -> usize {
    (0..word.len())
        .filter(|&i| {
            word[i] == first
                && i + run < word.len() + 1
                && word[i + 1..].len() >= run
                && word[i + 1..i + 1 + run].iter().all(|&s| s == second)
        })
        .count()
}

/// (number of `DU` valleys, number with size strictly between 0 and k).
fn valley_counts(word: &[Step], k: u32) -> (usize, usize) {
    let mut valleys = 0;
    let mut small = 0;
    let mut i = 0;
    while i < word.len() {
        if word[i] == Step::Down || word[i] == Step::SmallDown {
            let down = word[i];
            let mut j = i;
            while j < word.len() && word[j] == down {
                j += 1;
            }
            if j < word.len() && (word[j] == Step::Up || word[j] == Step::SmallUp) {
                valleys += 1;
                let run = j - i;
                if run >= 1 && run < k as usize {
                    small += 1;
                }
            }
            i = j;
        } else {
            i += 1;
        }
    }
    (valleys, small)
}

/// Area of a `k`-Dyck word above the lowest path `(UD^k)^n`: in row `y`
/// the path crosses at `x(y)` (down steps before the `y`-th up step) and
/// the lowest path crosses at `k(y-1)`.
pub(crate) fn dyck_area(word: &[Step], k: u32) -> u64 {
    let mut area = 0i64;
    let mut downs = 0i64;
    let mut y = 0i64;
    for &st in word {
        match st {
            Step::Up => {
                y += 1;
                area += i64::from(k) * (y - 1) - downs;
            }
            _ => downs += 1,
        }
    }
    debug_assert!(area >= 0);
    area as u64
}

fn area2(path: &LatticePath) -> u64 {
    let k = path.k();
    let word = path.steps();
    match path.family() {
        Family::Dyck => 2 * dyck_area(word, k),
        // Twice the area under the path (the lowest path H^n is the axis).
        Family::Motzkin | Family::AFamily => {
            let mut a2 = 0i64;
            let mut y = 0i64;
            for &st in word {
                let (dx, dy) = st.delta(path.family(), k);
                a2 += dx * (2 * y + dy);
                y += dy;
            }
            debug_assert!(a2 >= 0);
            a2 as u64
        }
        // Whole boxes above the diagonal lowest path H^n and below the path.
        Family::SchroederA => {
            let mut area = 0i64;
            let mut x = 0i64;
            let mut y = 0i64;
            for &st in word {
                match st {
                    Step::Up => {
                        y += 1;
                        area += (i64::from(k) * (y - 1) - x).max(0);
                    }
                    Step::Horiz => {
                        y += 1;
                        x += i64::from(k);
                        area += (i64::from(k) * (y - 1) - x).max(0);
                    }
                    _ => x += 1,
                }
            }
            2 * area as u64
        }
        // Row crossings against the lowest path (HD^{k-1})^n; the H steps
        // contribute half boxes, hence the doubling.
        Family::SchroederB => {
            let mut a2 = 0i64;
            let mut x = 0i64;
            let mut y = 0i64;
            for &st in word {
                match st {
                    Step::Up => {
                        y += 1;
                        a2 += (2 * i64::from(k) * (y - 1) + 1) - 2 * x;
                    }
                    Step::Horiz => {
                        y += 1;
                        a2 += (2 * i64::from(k) * (y - 1) + 1) - (2 * x + 1);
                        x += 1;
                    }
                    _ => x += 1,
                }
            }
            debug_assert!(a2 >= 0);
            a2 as u64
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::{enum_paths, LatticePath};

    fn stats(family: Family, k: u32, word: &str) -> PathStats {
        path_stats(&LatticePath::parse(family, k, word).unwrap())
    }

    /// Independent area oracle: twice the signed area of the closed polygon
    /// formed by the path followed by the reversed lowest path (shoelace).
    fn area2_shoelace(path: &LatticePath) -> i64 {
        let k = path.k();
        let family = path.family();
        let mut verts = vec![(0i64, 0i64)];
        let (mut x, mut y) = (0i64, 0i64);
        for &st in path.steps() {
            let (dx, dy) = st.delta(family, k);
            x += dx;
            y += dy;
            verts.push((x, y));
        }
        let lowest: Vec<Step> = match family {
            Family::Dyck => {
                let mut w = Vec::new();
                for _ in 0..path.size() {
                    w.push(Step::Up);
                    w.extend(std::iter::repeat_n(Step::Down, k as usize));
                }
                w
            }
            Family::Motzkin => vec![Step::Horiz; path.size()],
            Family::SchroederB => {
                let mut w = Vec::new();
                for _ in 0..path.size() {
                    w.push(Step::Horiz);
                    w.extend(std::iter::repeat_n(Step::Down, k as usize - 1));
                }
                w
            }
            _ => panic!("no shoelace oracle for this family"),
        };
        let (mut lx, mut ly) = (0i64, 0i64);
        let mut lower = vec![(0i64, 0i64)];
        for &st in &lowest {
            let (dx, dy) = st.delta(
                if family == Family::Motzkin { Family::Motzkin } else { family },
                k,
            );
            lx += dx;
            ly += dy;
            lower.push((lx, ly));
        }
        assert_eq!(lower.last(), verts.last());
        lower.reverse();
        verts.extend_from_slice(&lower[1..]);
        let mut twice = 0i64;
        for w in verts.windows(2) {
            let (x0, y0) = w[0];
            let (x1, y1) = w[1];
            twice += x0 * y1 - x1 * y0;
        }
        twice.abs()
    }

    #[test]
    fn schroeder_b_half_integer_area() {
        // |Y(mu_0/mu)| = 5/2 for UHDDD
        assert_eq!(stats(Family::SchroederB, 2, "UHDDD").area2, 5);
        // the lowest path itself has area 0
        assert_eq!(stats(Family::SchroederB, 2, "HDHD").area2, 0);
    }

    #[test]
    fn schroeder_b_d_statistic() {
        // lift UHDDD -> UUDDDD with Dyck area 2; d = 2 + 2 - 1 = 3
        assert_eq!(stats(Family::SchroederB, 2, "UHDDD").d_stat, Some(3));
        assert_eq!(stats(Family::SchroederB, 2, "UDUDDD").d_stat, Some(3));
        assert_eq!(stats(Family::SchroederB, 2, "HHDD").d_stat, Some(1));
    }

    #[test]
    fn lowest_dyck_path_stats() {
        for (n, k) in [(1u32, 1u32), (3, 2), (2, 3)] {
            let word: String = (0..n)
                .map(|_| format!("U{}", "D".repeat(k as usize)))
                .collect();
            let st = stats(Family::Dyck, k, &word);
            assert_eq!(st.area2, 0);
            assert_eq!(st.peaks_k, n as usize);
        }
    }

    #[test]
    fn valley_sizes() {
        // UDUDDD has one valley of size 1 (counted for k=2); UDDUDD has one
        // valley of size 2 (not counted)
        assert_eq!(stats(Family::Dyck, 2, "UDUDDD").val2_k, 1);
        assert_eq!(stats(Family::Dyck, 2, "UDDUDD").val2_k, 0);
        assert_eq!(stats(Family::Dyck, 2, "UDUDDD").valleys, 1);
        assert_eq!(stats(Family::Dyck, 2, "UDDUDD").valleys, 1);
    }

    #[test]
    fn dyck_4_2_seven_paths_of_area_3() {
        let with_area3: Vec<String> = enum_paths(Family::Dyck, 4, 2)
            .unwrap()
            .iter()
            .filter(|p| path_stats(p).area2 == 6)
            .map(|p| p.word_string())
            .collect();
        let expect = [
            "UUDDDUDDDUDD",
            "UUDDDDUDUDDD",
            "UDUDUDDDDUDD",
            "UDUDDUDDUDDD",
            "UDUDDDUUDDDD",
            "UDDUUDDDUDDD",
            "UDDUDUDUDDDD",
        ];
        assert_eq!(with_area3.len(), 7);
        for w in expect {
            assert!(with_area3.contains(&w.to_string()), "missing {w}");
        }
    }

    #[test]
    fn shoelace_oracle_agrees() {
        for (family, n, k) in [
            (Family::Dyck, 4, 2),
            (Family::Dyck, 3, 3),
            (Family::Motzkin, 6, 2),
            (Family::Motzkin, 5, 1),
            (Family::SchroederB, 3, 2),
            (Family::SchroederB, 3, 1),
        ] {
            for p in enum_paths(family, n, k).unwrap() {
                assert_eq!(
                    i64::try_from(path_stats(&p).area2).unwrap(),
                    area2_shoelace(&p),
                    "family {:?} word {}",
                    family,
                    p.word_string()
                );
            }
        }
    }

    #[test]
    fn area2_parity() {
        for (family, n, k) in [
            (Family::Dyck, 4, 2),
            (Family::Motzkin, 6, 2),
            (Family::Motzkin, 5, 3),
            (Family::SchroederA, 3, 1),
            (Family::SchroederA, 3, 2),
        ] {
            for p in enum_paths(family, n, k).unwrap() {
                assert_eq!(path_stats(&p).area2 % 2, 0, "{}", p.word_string());
            }
        }
    }

    #[test]
    fn schroeder_a_boxes_above_diagonal() {
        // H^n hugs the diagonal: zero boxes
        assert_eq!(stats(Family::SchroederA, 2, "HH").area2, 0);
        // H-free type-A paths are Dyck paths and the box count matches
        for p in enum_paths(Family::SchroederA, 3, 2).unwrap() {
            if p.count(Step::Horiz) == 0 {
                assert_eq!(path_stats(&p).area2, 2 * dyck_area(p.steps(), 2));
            }
        }
    }

    #[test]
    fn narayana_relation_k1() {
        // nonempty Dyck paths with k = 1: valleys = peaks - 1
        for n in 1..=6 {
            for p in enum_paths(Family::Dyck, n, 1).unwrap() {
                let st = path_stats(&p);
                assert_eq!(st.valleys, st.peaks - 1);
                assert_eq!(st.peaks, st.peaks_k);
            }
        }
    }
}
