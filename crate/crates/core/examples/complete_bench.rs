use osp_core::presentations::{chevalley_presentation, AlgebraSignature};
use osp_core::rewrite::build_rules;
use std::time::Instant;

fn main() {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse().unwrap())
        .collect();
    let sig = AlgebraSignature::new(args[0] as u16, args[1] as u16).unwrap();
    let p = chevalley_presentation(&sig, true);
    let mut rs = build_rules(&p, args[2]).unwrap();
    println!("initial rules {}", rs.len());
    let t = Instant::now();
    let st = rs.complete(20000).unwrap();
    println!(
        "{:?} rules {} complete {} in {:?}",
        st,
        rs.len(),
        rs.is_complete(),
        t.elapsed()
    );
}
