//! Vertices and facets of Lip(P) for the three-element poset 1,2 < 3.
use liplab::{fixtures, geometry};

fn main() {
    let p = fixtures::wedge3();
    let lip = geometry::hrep_lip(&p);
    for r in lip.rows() {
        println!("{:?} <= {}", r.normal, r.rhs);
    }
    let v = geometry::vertices(&p);
    println!("{} vertices", v.len());
    for x in v.points() {
        println!("  {x:?}");
    }
}
