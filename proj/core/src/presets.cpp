#include "nlse/presets.hpp"

namespace nlse {

PresetName preset_from_string(const std::string& name) {
    if (name == "linear" || name == "Linear") return PresetName::Linear;
    if (name == "bm" || name == "BM") return PresetName::BM;
    if (name == "kostin" || name == "Kostin") return PresetName::Kostin;
    if (name == "dg" || name == "DG") return PresetName::DG;
    if (name == "guerra-pusterla" || name == "GuerraPusterla" || name == "gp")
        return PresetName::GuerraPusterla;
    throw InvalidInputError("unknown preset name: " + name);
}

std::string to_string(PresetName name) {
    switch (name) {
        case PresetName::Linear: return "linear";
        case PresetName::BM: return "bm";
        case PresetName::Kostin: return "kostin";
        case PresetName::DG: return "dg";
        case PresetName::GuerraPusterla: return "guerra-pusterla";
    }
    return "linear";
}

CoefficientVector preset(PresetName name, const PresetParams& p) {
    if (p.hbar <= 0.0 || p.mass <= 0.0)
        throw InvalidInputError("preset requires hbar > 0 and mass > 0");

    const double nu1 = -p.hbar / (2.0 * p.mass);
    LinearMember lin{TimeFn::constant(nu1), TimeFn::constant(1.0 / p.hbar)};
    CoefficientVector c = embed_linear(lin);

    switch (name) {
        case PresetName::Linear:
            break;
        case PresetName::BM:
            c.alpha1 = TimeFn::constant(-p.b / p.hbar);
            break;
        case PresetName::Kostin:
            c.alpha2 = TimeFn::constant(p.f / p.mass);
            break;
        case PresetName::DG:
            c.nu2 = TimeFn::constant(p.hbar * p.D / 2.0);
            c.mu1 = TimeFn::constant(p.hbar * p.Dprime * p.c1);
            c.mu2 = TimeFn::constant(p.hbar * p.Dprime * p.c2 + 0.5 * nu1);
            c.mu3 = TimeFn::constant(p.hbar * p.Dprime * p.c3 - nu1);
            c.mu4 = TimeFn::constant(p.hbar * p.Dprime * p.c4);
            c.mu5 = TimeFn::constant(p.hbar * p.Dprime * p.c5 - 0.25 * nu1);
            break;
        case PresetName::GuerraPusterla: {
            PresetParams q = p;
            q.D = 0.0;
            q.c1 = q.c3 = q.c4 = 0.0;
            q.c5 = -0.5 * q.c2;
            return preset(PresetName::DG, q);
        }
    }
    return c;
}

} // namespace nlse
