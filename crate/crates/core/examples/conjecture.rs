//! Compare stat and ides over all connected posets on 5 elements.
use liplab::verify::{self, Status, Suite};

fn main() {
    let corpus = verify::corpus_exhaustive(5, true).unwrap();
    let reports = verify::run_suite(&corpus, &[Suite::Conjecture], 4);
    let bad = reports.iter().filter(|r| r.worst() == Status::Counterexample).count();
    println!("{} posets, {bad} counterexamples", reports.len());
    print!("{}", verify::summary_table(&reports));
}
