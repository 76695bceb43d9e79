// Generated from the corpus/ directory; a test keeps it in sync.

pub(super) static FILES: &[(&str, &str)] = &[
    ("A3.alg", include_str!("../../../../corpus/A3.alg")),
    ("A4.alg", include_str!("../../../../corpus/A4.alg")),
    ("aus2.alg", include_str!("../../../../corpus/aus2.alg")),
    ("aus3.alg", include_str!("../../../../corpus/aus3.alg")),
    ("kA2.alg", include_str!("../../../../corpus/kA2.alg")),
    ("kronecker.alg", include_str!("../../../../corpus/kronecker.alg")),
    ("manifest.toml", include_str!("../../../../corpus/manifest.toml")),
    ("modules/A3/M12.mod", include_str!("../../../../corpus/modules/A3/M12.mod")),
    ("modules/A3/P1.mod", include_str!("../../../../corpus/modules/A3/P1.mod")),
    ("modules/A3/P2.mod", include_str!("../../../../corpus/modules/A3/P2.mod")),
    ("modules/A3/P3.mod", include_str!("../../../../corpus/modules/A3/P3.mod")),
    ("modules/A3/S1.mod", include_str!("../../../../corpus/modules/A3/S1.mod")),
    ("modules/A3/S2.mod", include_str!("../../../../corpus/modules/A3/S2.mod")),
    ("modules/A4/M11.mod", include_str!("../../../../corpus/modules/A4/M11.mod")),
    ("modules/A4/M12.mod", include_str!("../../../../corpus/modules/A4/M12.mod")),
    ("modules/A4/M13.mod", include_str!("../../../../corpus/modules/A4/M13.mod")),
    ("modules/A4/M14.mod", include_str!("../../../../corpus/modules/A4/M14.mod")),
    ("modules/A4/M22.mod", include_str!("../../../../corpus/modules/A4/M22.mod")),
    ("modules/A4/M23.mod", include_str!("../../../../corpus/modules/A4/M23.mod")),
    ("modules/A4/M24.mod", include_str!("../../../../corpus/modules/A4/M24.mod")),
    ("modules/A4/M33.mod", include_str!("../../../../corpus/modules/A4/M33.mod")),
    ("modules/A4/M34.mod", include_str!("../../../../corpus/modules/A4/M34.mod")),
    ("modules/A4/M44.mod", include_str!("../../../../corpus/modules/A4/M44.mod")),
    ("modules/kA2/P1.mod", include_str!("../../../../corpus/modules/kA2/P1.mod")),
    ("modules/kA2/P2.mod", include_str!("../../../../corpus/modules/kA2/P2.mod")),
    ("modules/kA2/S1.mod", include_str!("../../../../corpus/modules/kA2/S1.mod")),
    ("modules/kronecker/I2.mod", include_str!("../../../../corpus/modules/kronecker/I2.mod")),
    ("modules/kronecker/J32.mod", include_str!("../../../../corpus/modules/kronecker/J32.mod")),
    ("modules/kronecker/P1.mod", include_str!("../../../../corpus/modules/kronecker/P1.mod")),
    ("modules/kronecker/P2.mod", include_str!("../../../../corpus/modules/kronecker/P2.mod")),
    ("modules/kronecker/Q23.mod", include_str!("../../../../corpus/modules/kronecker/Q23.mod")),
    ("modules/kronecker/R0.mod", include_str!("../../../../corpus/modules/kronecker/R0.mod")),
    ("modules/kronecker/R1.mod", include_str!("../../../../corpus/modules/kronecker/R1.mod")),
    ("modules/kronecker/R22.mod", include_str!("../../../../corpus/modules/kronecker/R22.mod")),
    ("modules/kronecker/Rinf.mod", include_str!("../../../../corpus/modules/kronecker/Rinf.mod")),
    ("modules/kronecker/S1.mod", include_str!("../../../../corpus/modules/kronecker/S1.mod")),
    ("modules/wild3/I2.mod", include_str!("../../../../corpus/modules/wild3/I2.mod")),
    ("modules/wild3/I3.mod", include_str!("../../../../corpus/modules/wild3/I3.mod")),
    ("modules/wild3/M110.mod", include_str!("../../../../corpus/modules/wild3/M110.mod")),
    ("modules/wild3/M111.mod", include_str!("../../../../corpus/modules/wild3/M111.mod")),
    ("modules/wild3/P1.mod", include_str!("../../../../corpus/modules/wild3/P1.mod")),
    ("modules/wild3/P2.mod", include_str!("../../../../corpus/modules/wild3/P2.mod")),
    ("modules/wild3/P3.mod", include_str!("../../../../corpus/modules/wild3/P3.mod")),
    ("modules/wild3/S1.mod", include_str!("../../../../corpus/modules/wild3/S1.mod")),
    ("modules/wild3/S2.mod", include_str!("../../../../corpus/modules/wild3/S2.mod")),
    ("nak_c22.alg", include_str!("../../../../corpus/nak_c22.alg")),
    ("nak_c32.alg", include_str!("../../../../corpus/nak_c32.alg")),
    ("nak_c33.alg", include_str!("../../../../corpus/nak_c33.alg")),
    ("nak_c432.alg", include_str!("../../../../corpus/nak_c432.alg")),
    ("nak_l221.alg", include_str!("../../../../corpus/nak_l221.alg")),
    ("square.alg", include_str!("../../../../corpus/square.alg")),
    ("wild3.alg", include_str!("../../../../corpus/wild3.alg")),
];
