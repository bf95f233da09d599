//! h* by two independent routes: alcove statistic and lattice-point counting.
use liplab::triangulation::{genfun_stat, DcOptions};
use liplab::{ehrhart, fixtures, geometry};

fn main() {
    for name in fixtures::NAMES {
        let p = fixtures::by_name(name).unwrap();
        let by_stat = genfun_stat(&p, DcOptions::default());
        let data = ehrhart::ehrhart_poly(&geometry::hrep_lip(&p)).unwrap();
        println!("{name}: stat {by_stat}, ehrhart {}, agree {}", data.hstar, by_stat == data.hstar);
    }
}
