use altcohom::symmetric::*;
use altcohom::foxneuwirth::{cohomology_dim, Variant};
fn main() {
    for d in 0..=8u32 {
        let h = enumerate_monomials(8, d).len();
        let nak = nakaoka_basis(8, d).len();
        let fnd = cohomology_dim(8, d, Variant::Fn).unwrap();
        println!("d={d}: hopf={h} nakaoka={nak} fn={fnd}");
        assert_eq!(h, nak);
        assert_eq!(h, fnd);
    }
    for d in 0..=8u32 {
        let fna = cohomology_dim(8, d, Variant::Fna).unwrap();
        let g = gysin_q(8, d).len() + gysin_a(8, d).len();
        println!("A8 d={d}: fna={fna} gysin={g}");
        assert_eq!(fna, g);
    }
}
