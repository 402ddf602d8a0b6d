use crate::error::{Error, Result};
use crate::resolution::{ceil_div, ResolutionSlice};

/// `R(-j)^(c,d) = R^(c,piece)(-shift)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShiftTransform {
    pub piece: i64,
    pub shift: i64,
}

/// `shift = ⌈(j - d)/c⌉`, `piece = shift*c + d - j`.
pub fn veronese_shift_transform(j: i64, c: i64, d: i64) -> Result<ShiftTransform> {
    if c < 1 {
        return Err(Error::usage("Veronese level must be at least 1"));
    }
    if !(0..c).contains(&d) {
        return Err(Error::usage(format!("piece index {d} outside 0..{c}")));
    }
    let shift = ceil_div(j - d, c);
    Ok(ShiftTransform {
        piece: shift * c + d - j,
        shift,
    })
}

/// Transports the free modules of `slice` to `R^(c)`: for each homological
/// index, the sorted multiset of pieces and shifts of `F_i^(c,d)`.
pub fn restrict_resolution_to_veronese(
    slice: &ResolutionSlice,
    c: i64,
    d: i64,
) -> Result<Vec<Vec<ShiftTransform>>> {
    (0..slice.len())
        .map(|i| {
            let mut col = slice
                .degrees(i)
                .into_iter()
                .map(|j| veronese_shift_transform(j, c, d))
                .collect::<Result<Vec<_>>>()?;
            col.sort();
            Ok(col)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn st(piece: i64, shift: i64) -> ShiftTransform {
        ShiftTransform { piece, shift }
    }

    #[test]
    fn examples() {
        for j in -5..10 {
            assert_eq!(veronese_shift_transform(j, 1, 0).unwrap(), st(0, j));
        }
        assert_eq!(veronese_shift_transform(5, 3, 1).unwrap(), st(2, 2));
        assert_eq!(veronese_shift_transform(4, 2, 0).unwrap(), st(0, 2));
        assert_eq!(veronese_shift_transform(0, 3, 2).unwrap(), st(2, 0));
        assert!(veronese_shift_transform(0, 3, 3).is_err());
        assert!(veronese_shift_transform(0, 2, -1).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]
        #[test]
        fn transform_bounds(j in -1000i64..1000, c in 1i64..50, d_raw in 0i64..50) {
            let d = d_raw % c;
            let t = veronese_shift_transform(j, c, d).unwrap();
            prop_assert_eq!(t.piece, t.shift * c + d - j);
            prop_assert!((0..c).contains(&t.piece));
        }
    }
}
