use crate::error::{Error, Result};
use crate::qcoeff::{rank, CyclotomicField, CyclotomicFieldElement};
use crate::specht::gram_matrix;
use crate::tableaux::Partition;

/// Rank of the Gram matrix of `S^lambda` at a primitive `e`-th root of
/// unity, which is the dimension of the simple head.
pub fn radical_rank(shape: &Partition, e: u32) -> Result<usize> {
    let field = CyclotomicField::new(e)?;
    let g = gram_matrix(shape)?;
    let rows: Vec<Vec<CyclotomicFieldElement>> = g
        .entries
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| {
                    let p = x.to_laurent().ok_or_else(|| Error::Inconsistent(format!("Gram entry {x} is not a Laurent polynomial")))?;
                    Ok(field.from_laurent(&p))
                })
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    Ok(rank(&rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_one() {
        let shape: Partition = "2,1".parse().unwrap();
        // det = [3]_q up to a unit, vanishing only at e = 3
        assert_eq!(radical_rank(&shape, 3).unwrap(), 1);
        assert_eq!(radical_rank(&shape, 2).unwrap(), 2);
    }

    #[test]
    fn generic_e_is_full_rank() {
        let shape: Partition = "3,2".parse().unwrap();
        assert_eq!(radical_rank(&shape, 7).unwrap(), 5);
    }

    #[test]
    fn column() {
        assert_eq!(radical_rank(&"1,1".parse().unwrap(), 2).unwrap(), 1);
    }
}
