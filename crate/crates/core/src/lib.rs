pub mod probe {
    use nalgebra::{DMatrix};
    use num_complex::Complex64;

    pub fn probe_svd() -> f64 {
        let m = DMatrix::<Complex64>::from_row_slice(2, 2, &[
            Complex64::new(1.0, 1.0), Complex64::new(0.0, 2.0),
            Complex64::new(3.0, 0.0), Complex64::new(1.0, -1.0),
        ]);
        let svd = m.clone().svd(true, true);
        let det = m.lu().determinant();
        svd.singular_values[0] + det.norm()
    }
}
