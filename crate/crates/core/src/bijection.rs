//! The bijection from ordered configurations onto tower-free configurations.
//!
//! An ordered configuration `R` with `ℓ` towers is mapped as follows. Its
//! even columns, read left to right, form the skeleton `R′`; compressing the
//! skeleton gives the tower-configuration, an ordered configuration of length
//! `ℓ` which is mapped recursively to a tower-free `T`. The expansion of `T`
//! replaces the even columns of `R`, which pairs every tower with an empty
//! column, and each pair together with the odd columns between its members
//! (a *section*) is rewritten into odd columns whose only descent encodes the
//! pair. Sections in the left block use [`Variant::Left`], those in the right
//! block [`Variant::Right`].
//!
//! The inverse reads the descents of a tower-free configuration, rebuilds
//! the expansion of `T`, recovers the skeleton recursively and then undoes
//! every section.

use crate::configuration::{Color, Column, Configuration, Row};
use crate::error::{Error, Result};

/// Which section rewrite applies: sections of the left (color One) block or
/// of the right (color Two) block.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Left,
    Right,
}

/// Shape of a section: tower first and empty last, or the reverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SectionCase {
    TowerFirst,
    EmptyFirst,
}

/// One descent of a tower-free configuration, decoded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecodedPair {
    /// 1-based position of the color-Two column of the descent.
    pub descent: usize,
    pub color: Color,
    pub case: SectionCase,
}

impl DecodedPair {
    /// The two even columns this pair stands for.
    pub fn columns(&self) -> [Column; 2] {
        match self.case {
            SectionCase::TowerFirst => [Column::Tower(self.color), Column::Empty],
            SectionCase::EmptyFirst => [Column::Empty, Column::Tower(self.color)],
        }
    }
}

/// A rewritten section, recorded by the traced entry points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionStep {
    /// 1-based inclusive span.
    pub start: usize,
    pub end: usize,
    pub variant: Variant,
    pub before: Vec<Column>,
    pub after: Vec<Column>,
}

impl SectionStep {
    pub fn before_compact(&self) -> String {
        self.before.iter().map(|c| c.code()).collect()
    }

    pub fn after_compact(&self) -> String {
        self.after.iter().map(|c| c.code()).collect()
    }
}

/// One level of the recursion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceLevel {
    pub depth: usize,
    pub input: Configuration,
    /// Forward: the skeleton `R′`. Inverse: the expanded pair code `U`.
    pub skeleton: Configuration,
    /// Forward: the tower-configuration. Inverse: the compressed pair code.
    pub compressed: Configuration,
    /// Forward: `R` with its even columns replaced by `U`. Inverse: the
    /// recovered skeleton `R′`.
    pub intermediate: Configuration,
    pub sections: Vec<SectionStep>,
    pub output: Configuration,
}

type Trace<'a> = Option<&'a mut Vec<TraceLevel>>;

/// The even columns of `r`, in order.
pub fn even_skeleton(r: &Configuration) -> Configuration {
    Configuration::from_valid(
        r.columns()
            .iter()
            .copied()
            .filter(|c| c.is_even())
            .collect(),
    )
}

/// Halves a configuration made of towers and empty columns: column `k` of
/// the result has the state of column `2k−1` on top and of column `2k` at
/// the bottom.
pub fn compress(s: &Configuration) -> Result<Configuration> {
    if let Some(k) = s.columns().iter().position(|c| c.is_odd()) {
        return Err(Error::HasOddColumns { position: k + 1 });
    }
    let columns = s
        .columns()
        .chunks(2)
        .enumerate()
        .map(|(k, pair)| {
            Column::from_slots(pair[0].color(), pair[1].color()).ok_or(Error::MixedColumn {
                first: 2 * k + 1,
                second: 2 * k + 2,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Configuration::from_valid(columns))
}

/// Doubles every slot of `t`, column by column and top before bottom: a
/// colored slot becomes a tower of its color, a blank slot an empty column.
pub fn expand(t: &Configuration) -> Configuration {
    let as_column = |slot: Option<Color>| slot.map_or(Column::Empty, Column::Tower);
    let columns = t
        .columns()
        .iter()
        .flat_map(|c| {
            let (top, bottom) = c.slots();
            [as_column(top), as_column(bottom)]
        })
        .collect();
    Configuration::from_valid(columns)
}

pub fn tower_configuration(r: &Configuration) -> Result<Configuration> {
    compress(&even_skeleton(r))
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedSection(msg.into())
}

fn flip_rows(rows: &mut [Row]) {
    for r in rows {
        *r = r.flipped();
    }
}

fn interior_rows(cols: &[Column]) -> Result<Vec<Row>> {
    cols.iter()
        .map(|c| {
            c.row()
                .ok_or_else(|| malformed("even column inside a section"))
        })
        .collect()
}

/// Rewrites a section into odd columns with a single descent.
///
/// The first column receives color Two (bottom when the tower has color One,
/// top otherwise), the last column receives color One (bottom when the tower
/// comes first, top otherwise) and the interior columns keep their rows with
/// color Two for [`Variant::Left`] and color One for [`Variant::Right`]. For
/// `Left`, if column `n−1` then sits in a different row from column 1, every
/// column but the last is flipped; for `Right`, if column 2 differs from
/// column `n`, every column but the first is flipped.
pub fn phi_section_forward(section: &Configuration, variant: Variant) -> Result<Configuration> {
    let cols = section.columns();
    let n = cols.len();
    if n < 2 {
        return Err(malformed("sections have at least two columns"));
    }
    let (color, case) = match (cols[0], cols[n - 1]) {
        (Column::Tower(c), Column::Empty) => (c, SectionCase::TowerFirst),
        (Column::Empty, Column::Tower(c)) => (c, SectionCase::EmptyFirst),
        _ => return Err(malformed("ends must be one tower and one empty column")),
    };
    let mut rows = Vec::with_capacity(n);
    rows.push(match color {
        Color::One => Row::Bottom,
        Color::Two => Row::Top,
    });
    rows.extend(interior_rows(&cols[1..n - 1])?);
    rows.push(match case {
        SectionCase::TowerFirst => Row::Bottom,
        SectionCase::EmptyFirst => Row::Top,
    });
    match variant {
        Variant::Left if rows[n - 2] != rows[0] => flip_rows(&mut rows[..n - 1]),
        Variant::Right if rows[1] != rows[n - 1] => flip_rows(&mut rows[1..]),
        _ => {}
    }
    let interior = match variant {
        Variant::Left => Color::Two,
        Variant::Right => Color::One,
    };
    let columns = rows
        .iter()
        .enumerate()
        .map(|(k, &row)| {
            let color = match k {
                0 => Color::Two,
                k if k == n - 1 => Color::One,
                _ => interior,
            };
            Column::odd(row, color)
        })
        .collect();
    Ok(Configuration::from_valid(columns))
}

/// Undoes [`phi_section_forward`]: removes the flip, restores the two end
/// columns from `skeleton` and recolors the interior with the block color.
///
/// The ends come from the skeleton of the preimage, which may hold two
/// towers or two empty columns, so the result is a run of columns rather
/// than a stand-alone configuration.
pub fn phi_section_inverse(
    section: &Configuration,
    variant: Variant,
    skeleton: (Column, Column),
) -> Result<Vec<Column>> {
    let cols = section.columns();
    let n = cols.len();
    if n < 2 {
        return Err(malformed("sections have at least two columns"));
    }
    let (descent_at, interior) = match variant {
        Variant::Left => (n - 2, Color::One),
        Variant::Right => (0, Color::Two),
    };
    let shape_ok = cols.iter().enumerate().all(|(k, c)| {
        let want = if k <= descent_at {
            Color::Two
        } else {
            Color::One
        };
        c.odd_color() == Some(want)
    });
    if !shape_ok {
        return Err(malformed(format!(
            "expected a single descent at column {}",
            descent_at + 1
        )));
    }
    if skeleton.0.is_odd() || skeleton.1.is_odd() {
        return Err(malformed("skeleton ends must be even columns"));
    }
    let mut rows = interior_rows(cols)?;
    match variant {
        Variant::Left if rows[0] != rows[n - 2] => flip_rows(&mut rows[..n - 1]),
        Variant::Right if rows[n - 1] != rows[1] => flip_rows(&mut rows[1..]),
        _ => {}
    }
    let mut columns: Vec<Column> = rows.iter().map(|&row| Column::odd(row, interior)).collect();
    columns[0] = skeleton.0;
    columns[n - 1] = skeleton.1;
    Ok(columns)
}

fn phi_level(r: &Configuration, depth: usize, mut trace: Trace<'_>) -> Result<Configuration> {
    if !r.is_ordered() {
        return Err(Error::NotOrdered);
    }
    let towers = r.tower_count();
    if towers == 0 {
        return Ok(r.clone());
    }
    let left_width = r.color_count(Color::One);
    let even: Vec<usize> = (0..r.len()).filter(|&k| r.columns()[k].is_even()).collect();

    let skeleton = even_skeleton(r);
    let compressed = compress(&skeleton)?;
    let image = phi_level(&compressed, depth + 1, trace.as_deref_mut())?;
    let u = expand(&image);

    let mut starred = r.columns().to_vec();
    for (&pos, &col) in even.iter().zip(u.columns()) {
        starred[pos] = col;
    }
    let starred = Configuration::from_valid(starred);

    let mut out = starred.columns().to_vec();
    let mut steps = Vec::with_capacity(towers);
    for pair in even.chunks(2) {
        let (start, end) = (pair[0], pair[1]);
        let variant = if end < left_width {
            Variant::Left
        } else if start >= left_width {
            Variant::Right
        } else {
            return Err(Error::NotOrdered);
        };
        let before = Configuration::from_valid(starred.columns()[start..=end].to_vec());
        let after = phi_section_forward(&before, variant)?;
        out[start..=end].copy_from_slice(after.columns());
        steps.push(SectionStep {
            start: start + 1,
            end: end + 1,
            variant,
            before: before.into_columns(),
            after: after.into_columns(),
        });
    }
    let out = Configuration::from_valid(out);
    if let Some(t) = trace {
        t.push(TraceLevel {
            depth,
            input: r.clone(),
            skeleton,
            compressed,
            intermediate: starred,
            sections: steps,
            output: out.clone(),
        });
    }
    Ok(out)
}

/// Maps an ordered configuration to a tower-free one with as many descents
/// as the input has towers. Ordered tower-free inputs are fixed.
pub fn phi(r: &Configuration) -> Result<Configuration> {
    phi_level(r, 0, None)
}

/// [`phi`] together with one [`TraceLevel`] per recursion level that
/// rewrote at least one section, innermost first.
pub fn phi_traced(r: &Configuration) -> Result<(Configuration, Vec<TraceLevel>)> {
    let mut trace = Vec::new();
    let out = phi_level(r, 0, Some(&mut trace))?;
    Ok((out, trace))
}

/// Reads every descent of a tower-free configuration: the row of its
/// color-Two column gives the tower color (bottom for One) and the row of
/// its color-One column the section case (bottom for tower first). Returns
/// the pairs and their concatenated even columns.
pub fn decode_pairs(q: &Configuration) -> Result<(Vec<DecodedPair>, Configuration)> {
    if !q.is_tower_free() {
        return Err(Error::NotTowerFree);
    }
    let pairs: Vec<DecodedPair> = q
        .descents()
        .into_iter()
        .map(|d| {
            let color = match q.column(d).row() {
                Some(Row::Bottom) => Color::One,
                _ => Color::Two,
            };
            let case = match q.column(d + 1).row() {
                Some(Row::Bottom) => SectionCase::TowerFirst,
                _ => SectionCase::EmptyFirst,
            };
            DecodedPair {
                descent: d,
                color,
                case,
            }
        })
        .collect();
    let u = Configuration::from_valid(pairs.iter().flat_map(DecodedPair::columns).collect());
    Ok((pairs, u))
}

fn not_in_image(msg: impl Into<String>) -> Error {
    Error::NotInImage(msg.into())
}

fn phi_inverse_level(
    q: &Configuration,
    depth: usize,
    mut trace: Trace<'_>,
) -> Result<Configuration> {
    let (pairs, u) = decode_pairs(q)?;
    if pairs.is_empty() {
        return Ok(q.clone());
    }
    let compressed = compress(&u)?;
    let skeleton = expand(&phi_inverse_level(
        &compressed,
        depth + 1,
        trace.as_deref_mut(),
    )?);
    let left_pairs = skeleton
        .columns()
        .iter()
        .filter(|&&c| c == Column::Tower(Color::One))
        .count();

    let cols = q.columns();
    let n = cols.len();
    let mut out = cols.to_vec();
    let mut steps = Vec::with_capacity(pairs.len());
    let mut next_free = 0;
    for (k, pair) in pairs.iter().enumerate() {
        let d = pair.descent - 1;
        let (variant, start, end) = if k < left_pairs {
            let mut start = d;
            while start > 0 && cols[start - 1].odd_color() == Some(Color::Two) {
                start -= 1;
            }
            (Variant::Left, start, d + 1)
        } else {
            let mut end = d + 1;
            while end + 1 < n && cols[end + 1].odd_color() == Some(Color::One) {
                end += 1;
            }
            (Variant::Right, d, end)
        };
        if start < next_free {
            return Err(not_in_image(format!(
                "sections overlap at column {}",
                start + 1
            )));
        }
        next_free = end + 1;
        let before = Configuration::from_valid(cols[start..=end].to_vec());
        let ends = (skeleton.columns()[2 * k], skeleton.columns()[2 * k + 1]);
        let after = phi_section_inverse(&before, variant, ends)?;
        out[start..=end].copy_from_slice(&after);
        steps.push(SectionStep {
            start: start + 1,
            end: end + 1,
            variant,
            before: before.into_columns(),
            after,
        });
    }
    let r = Configuration::new(out).map_err(|e| not_in_image(e.to_string()))?;
    if !r.is_ordered() {
        return Err(not_in_image(format!("reconstruction {r} is not ordered")));
    }
    let left_width = r.color_count(Color::One);
    let consistent = steps.iter().all(|s| match s.variant {
        Variant::Left => s.end <= left_width,
        Variant::Right => s.start > left_width,
    });
    if !consistent {
        return Err(not_in_image(format!(
            "sections of {r} straddle the block boundary"
        )));
    }
    if let Some(t) = trace {
        t.push(TraceLevel {
            depth,
            input: q.clone(),
            skeleton: u,
            compressed,
            intermediate: skeleton,
            sections: steps,
            output: r.clone(),
        });
    }
    Ok(r)
}

/// Inverse of [`phi`] on tower-free configurations.
pub fn phi_inverse(q: &Configuration) -> Result<Configuration> {
    phi_inverse_level(q, 0, None)
}

/// [`phi_inverse`] with one [`TraceLevel`] per level that undid sections,
/// innermost first.
pub fn phi_inverse_traced(q: &Configuration) -> Result<(Configuration, Vec<TraceLevel>)> {
    let mut trace = Vec::new();
    let out = phi_inverse_level(q, 0, Some(&mut trace))?;
    Ok((out, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::configuration::{enumerate_ordered, enumerate_tower_free};
    use std::collections::HashSet;

    fn c(s: &str) -> Configuration {
        s.parse().unwrap()
    }

    fn s(r: &Configuration) -> String {
        r.to_string()
    }

    #[test]
    fn skeleton_examples() {
        assert_eq!(s(&even_skeleton(&c(".A11.b2B2.."))), ".11.22..");
        assert!(even_skeleton(&c("BbA")).is_empty());
        assert_eq!(s(&even_skeleton(&c("A1."))), "1.");
    }

    #[test]
    fn compress_examples() {
        assert_eq!(s(&compress(&c(".11.22..")).unwrap()), "aA2.");
        assert_eq!(s(&compress(&c("2.")).unwrap()), "B");
        assert_eq!(
            compress(&c("12..")),
            Err(Error::MixedColumn {
                first: 1,
                second: 2
            })
        );
        assert_eq!(
            compress(&c("A1.")),
            Err(Error::HasOddColumns { position: 1 })
        );
    }

    #[test]
    fn expand_examples() {
        assert_eq!(s(&expand(&c("aA2."))), ".11.22..");
        assert_eq!(s(&expand(&c("B"))), "2.");
        assert!(expand(&Configuration::empty()).is_empty());
    }

    #[test]
    fn tower_configuration_chain() {
        let first = tower_configuration(&c(".A11.b2B2..")).unwrap();
        assert_eq!(s(&first), "aA2.");
        assert_eq!(s(&tower_configuration(&first).unwrap()), "B");
        assert!(tower_configuration(&c("AbBa")).unwrap().is_empty());
    }

    #[test]
    fn section_forward_examples() {
        assert_eq!(
            s(&phi_section_forward(&c(".A1"), Variant::Left).unwrap()),
            "BbA"
        );
        assert_eq!(
            s(&phi_section_forward(&c("2B."), Variant::Right).unwrap()),
            "BaA"
        );
        assert_eq!(
            s(&phi_section_forward(&c("1."), Variant::Left).unwrap()),
            "ba"
        );
        assert!(matches!(
            phi_section_forward(&c("AB"), Variant::Left),
            Err(Error::MalformedSection(_))
        ));
        assert!(matches!(
            phi_section_forward(&c("1..1"), Variant::Right),
            Err(Error::MalformedSection(_))
        ));
        assert!(matches!(
            phi_section_forward(&c("1.1."), Variant::Left),
            Err(Error::MalformedSection(_))
        ));
    }

    #[test]
    fn section_inverse_examples() {
        let one = Column::Tower(Color::One);
        let two = Column::Tower(Color::Two);
        let e = Column::Empty;
        let inv = |sect: &str, v, ends| -> String {
            phi_section_inverse(&c(sect), v, ends)
                .unwrap()
                .iter()
                .map(|c| c.code())
                .collect()
        };
        assert_eq!(inv("BbA", Variant::Left, (e, one)), ".A1");
        assert_eq!(inv("BaA", Variant::Right, (two, e)), "2B.");
        assert_eq!(inv("ba", Variant::Left, (one, e)), "1.");
        assert!(phi_section_inverse(&c("BaA"), Variant::Left, (one, e)).is_err());
        assert!(phi_section_inverse(
            &c("ba"),
            Variant::Left,
            (one, Column::odd(Row::Top, Color::One))
        )
        .is_err());
        // skeleton ends come from the preimage and may be two towers
        assert_eq!(inv("ba", Variant::Left, (one, one)), "11");
    }

    #[test]
    fn section_guarantees_hold_for_all_small_sections() {
        for len in 2..=7 {
            for inner in enumerate_tower_free(len - 2) {
                for color in [Color::One, Color::Two] {
                    for case in [SectionCase::TowerFirst, SectionCase::EmptyFirst] {
                        let pair = DecodedPair {
                            descent: 0,
                            color,
                            case,
                        }
                        .columns();
                        let mut cols = vec![pair[0]];
                        cols.extend_from_slice(inner.columns());
                        cols.push(pair[1]);
                        let sect = Configuration::new(cols).unwrap();
                        for variant in [Variant::Left, Variant::Right] {
                            let out = phi_section_forward(&sect, variant).unwrap();
                            let at = match variant {
                                Variant::Left => len - 1,
                                Variant::Right => 1,
                            };
                            assert_eq!(out.descents(), vec![at]);
                            let (pairs, _) = decode_pairs(&out).unwrap();
                            assert_eq!((pairs[0].color, pairs[0].case), (color, case));
                            let back = phi_section_inverse(
                                &out,
                                variant,
                                (sect.column(1), sect.column(len)),
                            )
                            .unwrap();
                            let rows =
                                |cols: &[Column]| cols.iter().map(|c| c.row()).collect::<Vec<_>>();
                            assert_eq!(rows(&back)[1..len - 1], rows(sect.columns())[1..len - 1]);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn phi_examples() {
        assert_eq!(s(&phi(&c(".A11.b2B2..")).unwrap()), "BbAbabBaAbA");
        assert_eq!(s(&phi(&c("AB")).unwrap()), "AB");
        assert_eq!(s(&phi(&c("A1.")).unwrap()), "Aba");
        assert_eq!(phi(&c("BA")), Err(Error::NotOrdered));
    }

    #[test]
    fn decode_examples() {
        let (pairs, u) = decode_pairs(&c("BbAbabBaAbA")).unwrap();
        assert_eq!(
            pairs.iter().map(|p| p.descent).collect::<Vec<_>>(),
            vec![2, 4, 7, 10]
        );
        assert_eq!(s(&u), ".11.2..1");
        let (pairs, u) = decode_pairs(&c("ba")).unwrap();
        assert_eq!(
            pairs,
            vec![DecodedPair {
                descent: 1,
                color: Color::One,
                case: SectionCase::TowerFirst
            }]
        );
        assert_eq!(s(&u), "1.");
        let (pairs, u) = decode_pairs(&c("AaBb")).unwrap();
        assert!(pairs.is_empty() && u.is_empty());
        assert_eq!(decode_pairs(&c("1.")).unwrap_err(), Error::NotTowerFree);
    }

    #[test]
    fn phi_inverse_examples() {
        assert_eq!(s(&phi_inverse(&c("ba")).unwrap()), "1.");
        assert_eq!(s(&phi_inverse(&c("BAbA")).unwrap()), "11..");
        assert_eq!(
            s(&phi_inverse(&c("aBBAaaBbABBBb")).unwrap()),
            "a1A1aa.A.BBBb"
        );
        assert_eq!(s(&phi_inverse(&c("BbAbabBaAbA")).unwrap()), ".A11.b2B2..");
        assert_eq!(phi_inverse(&c("1.")), Err(Error::NotTowerFree));
    }

    #[test]
    fn traces_record_every_level() {
        let (out, trace) = phi_traced(&c(".A11.b2B2..")).unwrap();
        assert_eq!(s(&out), "BbAbabBaAbA");
        assert_eq!(trace.len(), 2);
        assert_eq!(s(&trace[0].input), "aA2.");
        assert_eq!(s(&trace[1].skeleton), ".11.22..");
        assert_eq!(s(&trace[1].intermediate), ".A11.b2B..1");
        assert_eq!(trace[1].sections.len(), 4);
        let (back, inv) = phi_inverse_traced(&out).unwrap();
        assert_eq!(s(&back), ".A11.b2B2..");
        assert_eq!(s(&inv[1].skeleton), ".11.2..1");
        assert_eq!(s(&inv[1].intermediate), ".11.22..");
    }

    #[test]
    fn round_trip_small_n() {
        for n in 0..=6 {
            let mut seen = HashSet::new();
            for r in enumerate_ordered(n) {
                let q = phi(&r).unwrap();
                assert!(q.is_tower_free(), "{r} -> {q}");
                assert_eq!(q.descents().len(), r.tower_count());
                assert_eq!(phi_inverse(&q).unwrap(), r);
                assert!(seen.insert(q));
            }
            assert_eq!(seen.len(), 1 << (2 * n));
        }
    }

    #[test]
    fn compress_expand_identities() {
        for n in 0..=5 {
            for t in enumerate_tower_free(n) {
                assert_eq!(compress(&expand(&t)).unwrap(), t);
            }
            for r in enumerate_ordered(n) {
                let sk = even_skeleton(&r);
                assert_eq!(expand(&compress(&sk).unwrap()), sk);
                assert!(sk.is_ordered());
                assert!(tower_configuration(&r).unwrap().is_ordered());
            }
        }
    }
}
