//! Two-row grids with colored slots.
//!
//! A configuration of length `n` is a `2 × n` rectangle in which exactly `n`
//! slots carry one of two colors and no column carries both. Columns with no
//! colored slot are *empty*, columns with two are *towers* (both are *even*),
//! and columns with one are *odd*. Positions are 1-based throughout.
//!
//! The compact text form uses one character per column:
//!
//! | char | column |
//! |------|--------|
//! | `.`  | empty |
//! | `A`  | color One, top |
//! | `a`  | color One, bottom |
//! | `1`  | tower of color One |
//! | `B`  | color Two, top |
//! | `b`  | color Two, bottom |
//! | `2`  | tower of color Two |

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    One,
    Two,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Row {
    Top,
    Bottom,
}

impl Row {
    pub fn flipped(self) -> Row {
        match self {
            Row::Top => Row::Bottom,
            Row::Bottom => Row::Top,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Column {
    Empty,
    Odd { row: Row, color: Color },
    Tower(Color),
}

impl Column {
    /// The four odd columns in enumeration order `A, a, B, b`.
    pub const ODD: [Column; 4] = [
        Column::Odd {
            row: Row::Top,
            color: Color::One,
        },
        Column::Odd {
            row: Row::Bottom,
            color: Color::One,
        },
        Column::Odd {
            row: Row::Top,
            color: Color::Two,
        },
        Column::Odd {
            row: Row::Bottom,
            color: Color::Two,
        },
    ];

    pub fn odd(row: Row, color: Color) -> Column {
        Column::Odd { row, color }
    }

    pub fn from_code(ch: char) -> Option<Column> {
        Some(match ch {
            '.' => Column::Empty,
            'A' => Column::odd(Row::Top, Color::One),
            'a' => Column::odd(Row::Bottom, Color::One),
            '1' => Column::Tower(Color::One),
            'B' => Column::odd(Row::Top, Color::Two),
            'b' => Column::odd(Row::Bottom, Color::Two),
            '2' => Column::Tower(Color::Two),
            _ => return None,
        })
    }

    pub fn code(self) -> char {
        match self {
            Column::Empty => '.',
            Column::Odd {
                row: Row::Top,
                color: Color::One,
            } => 'A',
            Column::Odd {
                row: Row::Bottom,
                color: Color::One,
            } => 'a',
            Column::Tower(Color::One) => '1',
            Column::Odd {
                row: Row::Top,
                color: Color::Two,
            } => 'B',
            Column::Odd {
                row: Row::Bottom,
                color: Color::Two,
            } => 'b',
            Column::Tower(Color::Two) => '2',
        }
    }

    /// Column with the given top and bottom slot colors.
    pub fn from_slots(top: Option<Color>, bottom: Option<Color>) -> Option<Column> {
        match (top, bottom) {
            (None, None) => Some(Column::Empty),
            (Some(c), None) => Some(Column::odd(Row::Top, c)),
            (None, Some(c)) => Some(Column::odd(Row::Bottom, c)),
            (Some(c), Some(d)) if c == d => Some(Column::Tower(c)),
            _ => None,
        }
    }

    /// `(top, bottom)` slot colors.
    pub fn slots(self) -> (Option<Color>, Option<Color>) {
        match self {
            Column::Empty => (None, None),
            Column::Odd {
                row: Row::Top,
                color,
            } => (Some(color), None),
            Column::Odd {
                row: Row::Bottom,
                color,
            } => (None, Some(color)),
            Column::Tower(c) => (Some(c), Some(c)),
        }
    }

    pub fn slot_count(self) -> usize {
        match self {
            Column::Empty => 0,
            Column::Odd { .. } => 1,
            Column::Tower(_) => 2,
        }
    }

    pub fn is_odd(self) -> bool {
        matches!(self, Column::Odd { .. })
    }

    pub fn is_even(self) -> bool {
        !self.is_odd()
    }

    pub fn color(self) -> Option<Color> {
        match self {
            Column::Empty => None,
            Column::Odd { color, .. } | Column::Tower(color) => Some(color),
        }
    }

    /// The row of an odd column.
    pub fn row(self) -> Option<Row> {
        match self {
            Column::Odd { row, .. } => Some(row),
            _ => None,
        }
    }

    /// Odd column of color `color`, or `None` for even columns.
    pub fn odd_color(self) -> Option<Color> {
        match self {
            Column::Odd { color, .. } => Some(color),
            _ => None,
        }
    }
}

/// A valid configuration: the number of colored slots equals the number of
/// columns.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Configuration {
    columns: Vec<Column>,
}

impl Configuration {
    pub fn new(columns: Vec<Column>) -> Result<Self> {
        let slots: usize = columns.iter().map(|c| c.slot_count()).sum();
        if slots != columns.len() {
            return Err(Error::InvalidSlotCount {
                slots,
                columns: columns.len(),
            });
        }
        Ok(Configuration { columns })
    }

    /// Internal constructor for column vectors the caller has already
    /// established to be valid.
    pub(crate) fn from_valid(columns: Vec<Column>) -> Self {
        debug_assert_eq!(
            columns.iter().map(|c| c.slot_count()).sum::<usize>(),
            columns.len()
        );
        Configuration { columns }
    }

    pub fn empty() -> Self {
        Configuration {
            columns: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    /// Column at 1-based position `k`.
    pub fn column(&self, k: usize) -> Column {
        self.columns[k - 1]
    }

    pub fn into_columns(self) -> Vec<Column> {
        self.columns
    }

    pub fn tower_count(&self) -> usize {
        self.columns
            .iter()
            .filter(|c| matches!(c, Column::Tower(_)))
            .count()
    }

    pub fn is_tower_free(&self) -> bool {
        self.columns.iter().all(|c| c.is_odd())
    }

    /// Number of slots of color `color`.
    pub fn color_count(&self, color: Color) -> usize {
        self.columns
            .iter()
            .filter(|c| c.color() == Some(color))
            .map(|c| c.slot_count())
            .sum()
    }

    /// All color-One slots in the leftmost `2 × i` block and all color-Two
    /// slots in the rest, where `i` is the number of color-One slots.
    pub fn is_ordered(&self) -> bool {
        let i = self.color_count(Color::One);
        self.columns
            .iter()
            .enumerate()
            .all(|(k, c)| match c.color() {
                None => true,
                Some(Color::One) => k < i,
                Some(Color::Two) => k >= i,
            })
    }

    /// 1-based positions `k` where column `k` is odd of color Two and column
    /// `k + 1` is odd of color One.
    pub fn descents(&self) -> Vec<usize> {
        self.columns
            .iter()
            .tuple_windows()
            .enumerate()
            .filter(|(_, (x, y))| {
                x.odd_color() == Some(Color::Two) && y.odd_color() == Some(Color::One)
            })
            .map(|(k, _)| k + 1)
            .collect()
    }

    pub fn render(&self, mode: RenderMode) -> String {
        match mode {
            RenderMode::Compact => self.columns.iter().map(|c| c.code()).collect(),
            RenderMode::Grid => {
                let row = |top: bool| {
                    self.columns
                        .iter()
                        .map(|c| {
                            let (t, b) = c.slots();
                            if top {
                                t
                            } else {
                                b
                            }
                        })
                        .map(|slot| match slot {
                            None => '.',
                            Some(Color::One) => 'O',
                            Some(Color::Two) => 'X',
                        })
                        .collect::<String>()
                };
                format!("{}\n{}", row(true), row(false))
            }
        }
    }

    pub fn analyze(&self) -> Profile {
        let mut profile = Profile {
            ty: (self.color_count(Color::One), self.color_count(Color::Two)),
            ordered: self.is_ordered(),
            tower_free: self.is_tower_free(),
            descents: self.descents(),
            ..Profile::default()
        };
        for (k, c) in self.columns.iter().enumerate() {
            match c {
                Column::Empty => profile.empties.push(k + 1),
                Column::Tower(_) => profile.towers.push(k + 1),
                Column::Odd { .. } => profile.odds.push(k + 1),
            }
        }
        profile
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(RenderMode::Compact))
    }
}

impl fmt::Debug for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Configuration({:?})", self.render(RenderMode::Compact))
    }
}

impl FromStr for Configuration {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_compact(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderMode {
    Compact,
    /// Two newline-separated rows; `O` is color One, `X` color Two, `.` blank.
    Grid,
}

/// Derived statistics of a configuration.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Profile {
    /// `(i, j)`: color-One and color-Two slot counts.
    pub ty: (usize, usize),
    pub towers: Vec<usize>,
    pub empties: Vec<usize>,
    pub odds: Vec<usize>,
    pub ordered: bool,
    pub tower_free: bool,
    pub descents: Vec<usize>,
}

pub fn parse_compact(s: &str) -> Result<Configuration> {
    let columns = s
        .chars()
        .enumerate()
        .map(|(k, ch)| {
            Column::from_code(ch).ok_or(Error::BadCharacter {
                ch,
                position: k + 1,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Configuration::new(columns)
}

/// An `i`-subset `a` of `[2i]` and a `j`-subset `b` of `[2j]`, both sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetPair {
    pub i: usize,
    pub j: usize,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

fn block_columns(width: usize, subset: &[usize], color: Color, name: &str) -> Result<Vec<Column>> {
    if subset.len() != width {
        return Err(Error::InvalidSubset(format!(
            "{name} has {} elements, expected {width}",
            subset.len()
        )));
    }
    let mut top = vec![None; width];
    let mut bottom = vec![None; width];
    for &s in subset {
        let slot = match s {
            s if (1..=width).contains(&s) => &mut top[s - 1],
            s if (width + 1..=2 * width).contains(&s) => &mut bottom[s - width - 1],
            _ => {
                return Err(Error::InvalidSubset(format!(
                    "{name} element {s} outside 1..={}",
                    2 * width
                )))
            }
        };
        if slot.replace(color).is_some() {
            return Err(Error::InvalidSubset(format!("{name} repeats {s}")));
        }
    }
    Ok(top
        .into_iter()
        .zip(bottom)
        .map(|(t, b)| Column::from_slots(t, b).expect("single color per block"))
        .collect())
}

/// Ordered configuration of type `(i, j)` whose left `2 × i` block has color
/// One at the slots of `a` and whose right `2 × j` block has color Two at the
/// slots of `b`. Slots of each block are numbered row by row, top row first.
pub fn from_subset_pair(i: usize, j: usize, a: &[usize], b: &[usize]) -> Result<Configuration> {
    let mut columns = block_columns(i, a, Color::One, "A")?;
    columns.extend(block_columns(j, b, Color::Two, "B")?);
    Ok(Configuration::from_valid(columns))
}

pub fn to_subset_pair(r: &Configuration) -> Result<SubsetPair> {
    if !r.is_ordered() {
        return Err(Error::NotOrdered);
    }
    let i = r.color_count(Color::One);
    let j = r.len() - i;
    let read = |block: &[Column], width: usize| {
        let mut set = Vec::new();
        for (k, c) in block.iter().enumerate() {
            if c.slots().0.is_some() {
                set.push(k + 1);
            }
        }
        for (k, c) in block.iter().enumerate() {
            if c.slots().1.is_some() {
                set.push(width + k + 1);
            }
        }
        set
    };
    Ok(SubsetPair {
        i,
        j,
        a: read(&r.columns[..i], i),
        b: read(&r.columns[i..], j),
    })
}

/// Every ordered `n`-configuration exactly once, in lexicographic order of
/// `(i, A, B)` with subsets compared as sorted sequences.
pub fn enumerate_ordered(n: usize) -> impl Iterator<Item = Configuration> {
    (0..=n).flat_map(move |i| {
        let j = n - i;
        let rights: Vec<Vec<usize>> = (1..=2 * j).combinations(j).collect();
        (1..=2 * i).combinations(i).flat_map(move |a| {
            rights
                .clone()
                .into_iter()
                .map(move |b| from_subset_pair(i, j, &a, &b).expect("enumerated subsets are valid"))
        })
    })
}

/// The `index`-th tower-free `n`-configuration: `index` read in base 4, most
/// significant digit first, with digits `0..4` naming `A, a, B, b`.
pub fn tower_free_at(n: usize, index: u64) -> Configuration {
    let columns = (0..n)
        .rev()
        .map(|k| Column::ODD[((index >> (2 * k)) & 3) as usize])
        .collect();
    Configuration::from_valid(columns)
}

/// All `4^n` tower-free `n`-configurations in lexicographic column-code order.
pub fn enumerate_tower_free(n: usize) -> impl Iterator<Item = Configuration> {
    assert!(n < 32, "4^n must fit in u64");
    (0..1u64 << (2 * n)).map(move |k| tower_free_at(n, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const SAMPLE: &str = ".A11.b2B2..";

    fn c(s: &str) -> Configuration {
        s.parse().unwrap()
    }

    #[test]
    fn subset_pair_encoding_matches_displayed_rectangle() {
        let r = from_subset_pair(5, 6, &[2, 3, 4, 8, 9], &[2, 3, 4, 7, 8, 10]).unwrap();
        assert_eq!(r.to_string(), SAMPLE);
        assert_eq!(
            from_subset_pair(0, 0, &[], &[]).unwrap(),
            Configuration::empty()
        );
        assert_eq!(from_subset_pair(1, 0, &[1], &[]).unwrap().to_string(), "A");
    }

    #[test]
    fn subset_pair_rejects_bad_input() {
        assert!(matches!(
            from_subset_pair(2, 0, &[1], &[]),
            Err(Error::InvalidSubset(_))
        ));
        assert!(matches!(
            from_subset_pair(1, 0, &[3], &[]),
            Err(Error::InvalidSubset(_))
        ));
        assert!(matches!(
            from_subset_pair(2, 0, &[1, 1], &[]),
            Err(Error::InvalidSubset(_))
        ));
    }

    #[test]
    fn subset_pair_read_back() {
        let p = to_subset_pair(&c(SAMPLE)).unwrap();
        assert_eq!(
            p,
            SubsetPair {
                i: 5,
                j: 6,
                a: vec![2, 3, 4, 8, 9],
                b: vec![2, 3, 4, 7, 8, 10]
            }
        );
        let e = to_subset_pair(&Configuration::empty()).unwrap();
        assert_eq!((e.i, e.j, e.a.len(), e.b.len()), (0, 0, 0, 0));
        let ab = to_subset_pair(&c("AB")).unwrap();
        assert_eq!((ab.i, ab.j, ab.a, ab.b), (1, 1, vec![1], vec![1]));
        assert_eq!(to_subset_pair(&c("BA")), Err(Error::NotOrdered));
    }

    #[test]
    fn analyze_examples() {
        let p = c(SAMPLE).analyze();
        assert_eq!(p.ty, (5, 6));
        assert_eq!(p.towers, vec![3, 4, 7, 9]);
        assert_eq!(p.empties, vec![1, 5, 10, 11]);
        assert!(p.ordered);
        assert!(!p.tower_free);

        let q = c("BbAbabBaAbA").analyze();
        assert!(q.tower_free);
        assert_eq!(q.descents, vec![2, 4, 7, 10]);

        let e = Configuration::empty().analyze();
        assert_eq!(e.ty, (0, 0));
        assert!(e.ordered && e.tower_free);
    }

    #[test]
    fn parse_and_render() {
        assert_eq!(c("").len(), 0);
        assert_eq!(
            c("1.").columns(),
            &[Column::Tower(Color::One), Column::Empty]
        );
        assert_eq!(
            parse_compact("A?"),
            Err(Error::BadCharacter {
                ch: '?',
                position: 2
            })
        );
        assert_eq!(
            parse_compact("1"),
            Err(Error::InvalidSlotCount {
                slots: 2,
                columns: 1
            })
        );
        assert_eq!(c(SAMPLE).render(RenderMode::Compact), SAMPLE);
        assert_eq!(c("1.").render(RenderMode::Grid), "O.\nO.");
        assert_eq!(Configuration::empty().render(RenderMode::Grid), "\n");
        assert_eq!(c("aB").render(RenderMode::Grid), ".X\nO.");
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_ordered(0).count(), 1);
        assert_eq!(enumerate_ordered(2).count(), 16);
        let per_i: Vec<usize> = (0..=3)
            .map(|i| {
                enumerate_ordered(3)
                    .filter(|r| r.color_count(Color::One) == i)
                    .count()
            })
            .collect();
        assert_eq!(per_i, vec![20, 12, 12, 20]);
        let singles: Vec<String> = enumerate_tower_free(1).map(|r| r.to_string()).collect();
        assert_eq!(singles, ["A", "a", "B", "b"]);
        assert_eq!(enumerate_tower_free(2).count(), 16);
        assert_eq!(enumerate_tower_free(8).count(), 65536);
    }

    #[test]
    fn enumerations_are_sorted_and_distinct() {
        let digit = |c: &Column| Column::ODD.iter().position(|o| o == c).unwrap();
        let tf: Vec<Vec<usize>> = enumerate_tower_free(3)
            .map(|r| r.columns().iter().map(digit).collect())
            .collect();
        assert!(tf.windows(2).all(|w| w[0] < w[1]));
        let ord: Vec<Configuration> = enumerate_ordered(4).collect();
        let keys: Vec<_> = ord
            .iter()
            .map(|r| {
                let p = to_subset_pair(r).unwrap();
                (p.i, p.a, p.b)
            })
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn ordered_blocks_balance_towers_and_empties() {
        for n in 0..=6 {
            for r in enumerate_ordered(n) {
                let i = r.color_count(Color::One);
                assert!(r.is_ordered());
                let p = r.analyze();
                assert_eq!(p.towers.len(), p.empties.len());
                let left_towers = p.towers.iter().filter(|&&k| k <= i).count();
                let left_empties = p.empties.iter().filter(|&&k| k <= i).count();
                assert_eq!(left_towers, left_empties);
                assert_eq!(parse_compact(&r.render(RenderMode::Compact)).unwrap(), r);
            }
        }
    }

    fn arb_configuration() -> impl Strategy<Value = Configuration> {
        (0usize..10)
            .prop_flat_map(|n| (0..=n / 2).prop_map(move |t| (n, t)))
            .prop_flat_map(|(n, t)| {
                (
                    proptest::collection::vec(any::<bool>(), t),
                    proptest::collection::vec(0usize..4, n - 2 * t),
                )
                    .prop_map(move |(colors, odds)| {
                        let mut cols = vec![Column::Empty; t];
                        cols.extend(
                            colors.into_iter().map(|one| {
                                Column::Tower(if one { Color::One } else { Color::Two })
                            }),
                        );
                        cols.extend(odds.into_iter().map(|k| Column::ODD[k]));
                        cols
                    })
                    .prop_shuffle()
            })
            .prop_map(|cols| Configuration::new(cols).unwrap())
    }

    proptest! {
        #[test]
        fn compact_round_trip(r in arb_configuration()) {
            prop_assert_eq!(parse_compact(&r.to_string()).unwrap(), r.clone());
            let p = r.analyze();
            prop_assert_eq!(p.ty.0 + p.ty.1, r.len());
            prop_assert_eq!(p.towers.len() + p.empties.len() + p.odds.len(), r.len());
            prop_assert_eq!(p.towers.len(), p.empties.len());
        }

        #[test]
        fn subset_pairs_give_ordered_configurations(i in 0usize..6, j in 0usize..6, seed in any::<u64>()) {
            let pick = |width: usize, salt: u64| {
                let mut all: Vec<usize> = (1..=2 * width).collect();
                let mut s = seed ^ salt;
                for k in (1..all.len()).rev() {
                    s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    all.swap(k, (s >> 33) as usize % (k + 1));
                }
                let mut v: Vec<usize> = all.into_iter().take(width).collect();
                v.sort_unstable();
                v
            };
            let (a, b) = (pick(i, 1), pick(j, 2));
            let r = from_subset_pair(i, j, &a, &b).unwrap();
            prop_assert!(r.analyze().ordered);
            prop_assert_eq!(to_subset_pair(&r).unwrap(), SubsetPair { i, j, a, b });
        }
    }
}
