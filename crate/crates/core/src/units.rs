//! dB/linear conversions used throughout.

/// Power ratio in dB to linear.
#[inline]
pub fn db_to_lin(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

/// Linear power ratio to dB.
#[inline]
pub fn lin_to_db(lin: f64) -> f64 {
    10.0 * lin.log10()
}

/// dBm to milliwatts.
#[inline]
pub fn dbm_to_mw(dbm: f64) -> f64 {
    db_to_lin(dbm)
}

/// Milliwatts to dBm.
#[inline]
pub fn mw_to_dbm(mw: f64) -> f64 {
    lin_to_db(mw)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for db in [-30.0, -3.0, 0.0, 10.0, 27.5] {
            assert!((lin_to_db(db_to_lin(db)) - db).abs() < 1e-12);
        }
        assert_eq!(db_to_lin(0.0), 1.0);
        assert!((dbm_to_mw(30.0) - 1000.0).abs() < 1e-9);
    }
}
