#include "lws/mesh.hpp"

#include "lws/errors.hpp"
#include "lws/format.hpp"

namespace lws {

SurfaceMesh build_mesh(const SurfacePatch& patch, int nu, int nv) {
    if (nu < 2 || nv < 2) throw InvalidDomain("mesh needs at least a 2x2 grid");
    SurfaceMesh m;
    m.vertices.reserve(static_cast<std::size_t>(nu) * nv);
    for (int i = 0; i < nu; ++i) {
        const double u =
            i == nu - 1 ? patch.u1 : patch.u0 + (patch.u1 - patch.u0) * i / (nu - 1);
        for (int k = 0; k < nv; ++k) {
            const double v =
                k == nv - 1 ? patch.v1
                            : patch.v0 + (patch.v1 - patch.v0) * k / (nv - 1);
            const Jet2 jet = patch.jet(u, v);
            const CurvatureData cd = curvature(jet);
            m.vertices.push_back(jet.X);
            m.H.push_back(cd.H);
            m.K.push_back(cd.K);
            m.w_sign.push_back(cd.epsilon);
            m.us.push_back(u);
            m.vs.push_back(v);
        }
    }
    for (int i = 0; i + 1 < nu; ++i) {
        for (int k = 0; k + 1 < nv; ++k) {
            const int base = i * nv + k;
            m.quads.push_back({base, base + nv, base + nv + 1, base + 1});
        }
    }
    return m;
}

std::string mesh_to_obj(const SurfaceMesh& mesh) {
    std::string out;
    out.reserve(mesh.vertices.size() * 40);
    for (const MVec3& p : mesh.vertices) {
        out += "v ";
        out += format_double(p.x);
        out += ' ';
        out += format_double(p.y);
        out += ' ';
        out += format_double(p.z);
        out += '\n';
    }
    for (const auto& q : mesh.quads) {
        out += "f ";
        out += std::to_string(q[0] + 1);
        out += ' ';
        out += std::to_string(q[1] + 1);
        out += ' ';
        out += std::to_string(q[2] + 1);
        out += ' ';
        out += std::to_string(q[3] + 1);
        out += '\n';
    }
    return out;
}

std::string mesh_to_csv(const SurfaceMesh& mesh) {
    std::string out = "u,v,x,y,z,H,K\n";
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
        out += format_double(mesh.us[i]);
        out += ',';
        out += format_double(mesh.vs[i]);
        out += ',';
        out += format_double(mesh.vertices[i].x);
        out += ',';
        out += format_double(mesh.vertices[i].y);
        out += ',';
        out += format_double(mesh.vertices[i].z);
        out += ',';
        out += format_double(mesh.H[i]);
        out += ',';
        out += format_double(mesh.K[i]);
        out += '\n';
    }
    return out;
}

} // namespace lws
