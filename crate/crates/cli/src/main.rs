fn main() {
    println!("knotcalc");
}
