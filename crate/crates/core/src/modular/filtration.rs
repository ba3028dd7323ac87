use crate::error::Result;
use crate::qcoeff::LaurentPoly;
use crate::specht::{SpechtModule, SpechtVector};
use crate::tableaux::{Node, Partition, Tableau};

/// `E_1 ⊃ E_2 ⊃ ... ⊃ E_M` where `E_j` is spanned by the standard `e_t`
/// with `n` in row `k_j` or below.
#[derive(Clone, Debug)]
pub struct BranchingFiltration {
    pub shape: Partition,
    /// Removable nodes, top to bottom.
    pub nodes: Vec<Node>,
    /// Basis tableaux of each `E_j`.
    pub layers: Vec<Vec<Tableau>>,
    /// `lambda` minus `nodes[j]`.
    pub quotient_shapes: Vec<Partition>,
    /// Every `E_j` is stable under `T_1, ..., T_{n-2}`.
    pub closed: bool,
}

impl BranchingFiltration {
    /// `dim E_j / E_{j+1}` for every `j`.
    pub fn quotient_dims(&self) -> Vec<usize> {
        (0..self.layers.len())
            .map(|j| self.layers[j].len() - self.layers.get(j + 1).map_or(0, Vec::len))
            .collect()
    }
}

pub fn branching_filtration(shape: &Partition) -> Result<BranchingFiltration> {
    let module = SpechtModule::shared(shape)?;
    let n = shape.n();
    let nodes = shape.removable_nodes();
    let layers: Vec<Vec<Tableau>> = nodes
        .iter()
        .map(|k| module.basis().iter().filter(|t| t.node_of(n).row >= k.row).cloned().collect())
        .collect();
    let quotient_shapes = nodes.iter().map(|&k| shape.remove_node(k)).collect::<Result<_>>()?;
    let mut closed = true;
    for (k, layer) in nodes.iter().zip(&layers) {
        for t in layer {
            for i in 1..n.saturating_sub(1) {
                let image = module.act_gen(&SpechtVector::<LaurentPoly>::basis(t), i)?;
                closed &= image.iter().all(|(s, _)| s.node_of(n).row >= k.row);
            }
        }
    }
    Ok(BranchingFiltration { shape: shape.clone(), nodes, layers, quotient_shapes, closed })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_one() {
        let f = branching_filtration(&"2,1".parse().unwrap()).unwrap();
        assert_eq!(f.nodes, vec![Node::new(1, 2), Node::new(2, 1)]);
        assert_eq!(f.quotient_dims(), vec![1, 1]);
        assert_eq!(f.quotient_shapes[0].to_string(), "1,1");
        assert!(f.closed);
    }

    #[test]
    fn single_row() {
        let f = branching_filtration(&"4".parse().unwrap()).unwrap();
        assert_eq!(f.layers.len(), 1);
        assert_eq!(f.quotient_dims(), vec![1]);
    }
}
