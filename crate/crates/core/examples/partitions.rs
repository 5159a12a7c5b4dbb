//! Partitions, hook lengths and complements in a rectangle.

use grassmann_hodge::{Cell, Partition, Rectangle};

fn main() -> grassmann_hodge::Result<()> {
    let lam = Partition::new(vec![7, 5, 3, 2, 2, 1, 1])?;
    println!("λ = {lam}, |λ| = {}, λᵀ = {}", lam.size(), lam.conjugate());
    println!("semiperimeter ρ(λ) = {}", lam.semiperimeter());
    println!("h(1,1) = {}", lam.hook_length(Cell::new(1, 1))?);

    println!("hook lengths:");
    for row in lam.hook_lengths() {
        let line: Vec<String> = row.iter().map(|h| format!("{h:>3}")).collect();
        println!("  {}", line.join(""));
    }

    let rect = Rectangle::grassmannian(4, 9)?;
    let mu = Partition::new(vec![4, 3, 1])?;
    println!(
        "{mu} in the {}x{} box: complement {}",
        rect.width(),
        rect.height(),
        mu.complement(&rect)?
    );
    Ok(())
}
