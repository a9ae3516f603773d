//! Runs the acceptance suite and prints one line per criterion.
fn main() {
    for o in superchar::acceptance::run_all() {
        println!("{o}");
    }
}
