use twofloat::TwoFloat;
fn main() {
    let two_pi = TwoFloat::from(2.0) * twofloat::consts::PI;
    for k in [1usize, 9, 33, 63] {
        let theta = two_pi * TwoFloat::from(k as f64) / TwoFloat::from(64.0);
        let (s, c) = theta.sin_cos();
        println!("k={k} theta=({:.20e},{:.6e}) sin=({:.20e},{:.6e}) cos=({:.20e},{:.6e})",
            theta.hi(), theta.lo(), s.hi(), s.lo(), c.hi(), c.lo());
    }
    for v in [0.9238795325112867f64, -0.3826834323650898, 1.0] {
        let e = TwoFloat::from(v).exp();
        println!("exp({v:.16e}) = ({:.20e},{:.6e})", e.hi(), e.lo());
    }
}
