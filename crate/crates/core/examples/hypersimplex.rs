//! Slabs of Lip(P) by the value at the top: volumes and half-open h*.
use liplab::triangulation::{genfun_by_top_descents, DcOptions};
use liplab::{ehrhart, fixtures, geometry};

fn main() {
    let p = fixtures::chain(5);
    let graded = genfun_by_top_descents(&p, DcOptions::default()).unwrap();
    for k in 1..=p.height() {
        let q = geometry::hrep_hypersimplex(&p, k, false).unwrap();
        let vol = ehrhart::normalized_volume(&ehrhart::ehrhart_poly(&q).unwrap()).unwrap();
        let slab = ehrhart::ehrhart_poly(&geometry::hypersimplex_slab(&p, k).unwrap()).unwrap();
        let dc = graded.get(&(k as u32 - 1)).cloned().unwrap_or_default();
        println!("k={k} volume {vol} slab h* {} dc {dc}", slab.hstar);
    }
}
