//! A truncated gl(2|2) block graph, its path matrices and DOT output.
use superchar::blockgraph::{build_block_graph, inversion_check, mat_mul};
use superchar::{build_algebra, Kind};

fn main() -> superchar::Result<()> {
    let g = build_algebra(Kind::Gl, 2, 2)?;
    let graph = build_block_graph(&g, &[g.zero()], 2)?;
    println!("{} vertices, {} edges, A^> A^< = 1: {}", graph.len(), graph.edges.len(), inversion_check(&graph)?);
    let p = mat_mul(&graph.a_greater(), &graph.a_less());
    println!("diagonal of the product: {:?}", (0..p.len()).map(|i| p[i][i]).collect::<Vec<_>>());
    print!("{}", graph.to_dot());
    Ok(())
}
