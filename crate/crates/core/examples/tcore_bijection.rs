//! t-cores, their interiors, and the boundary bijection with (t-1)-bounded
//! partitions.

use grassmann_hodge::tcore::{boundary_partition, coarsen, is_t_core, skew_inverse, t_interior};
use grassmann_hodge::Partition;

fn main() -> grassmann_hodge::Result<()> {
    let lam = Partition::new(vec![7, 5, 3, 2, 2, 1, 1])?;
    let t = 3;
    println!("{lam} is a {t}-core: {}", is_t_core(&lam, t));

    let split = t_interior(&lam, t)?;
    println!(
        "interior {} (size {}), boundary size {}",
        split.interior,
        split.interior.size(),
        split.boundary_size
    );

    let mu = boundary_partition(&lam, t)?;
    println!("∂ = {mu}");
    println!("skew_inverse(∂) = {}", skew_inverse(&mu, t)?);

    println!("every 2-bounded partition of 4 and its 3-core:");
    for parts in [vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]] {
        let mu = Partition::new(parts)?;
        println!("  {mu} -> {}", skew_inverse(&mu, 3)?);
    }

    let c = coarsen(&Partition::new(vec![8, 5, 5, 5, 3, 3, 3])?)?;
    println!("blocks: rows {:?}, cols {:?}", c.row_mults(), c.col_mults());
    Ok(())
}
