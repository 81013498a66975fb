fn main() {
    println!("{}", mellin_pencil::probe::probe_svd());
}
