//! Twisted Hodge numbers of a Grassmannian through Borel–Weil–Bott.

use grassmann_hodge::bwb::{alpha_sequence, bwb_outcome, hodge_number, hodge_table, BwbOutcome};
use grassmann_hodge::enumeration::{knijt_witnesses, KnijtQuery};
use grassmann_hodge::Partition;

fn main() -> grassmann_hodge::Result<()> {
    let (k, n) = (2, 5);
    for t in [0, 1, 2, 3] {
        let table = hodge_table(k, n, t)?;
        println!("Gr({k},{n}), t = {t}: total {}", table.total());
        for (i, j, dim) in table.sorted_by_j() {
            println!("  h^{i}(Ω^{j}({t})) = {dim}");
        }
    }

    let lam = Partition::new(vec![2, 1])?;
    let alpha = alpha_sequence(&lam, k, n, 2)?;
    match bwb_outcome(&alpha) {
        BwbOutcome::Vanishes => println!("{lam}: acyclic"),
        BwbOutcome::Concentrated { degree, beta, dim } => {
            println!(
                "{lam}: α = {:?}, degree {degree}, β = {:?}, dim {dim}",
                alpha.entries(),
                beta.entries()
            )
        }
    }

    println!(
        "h^12(Gr(8,12), Ω^20(3)) = {}",
        hodge_number(8, 12, 12, 20, 3)?
    );
    let q = KnijtQuery::new(8, 12, 12, 20, 3)?;
    for w in knijt_witnesses(&q, 5)? {
        println!("  witness {w}");
    }
    Ok(())
}
