// Regenerates the golden fixture files under fixtures/ from the
// transcriptions in transcribed.hpp.  Usage: gen_fixtures [OUTPUT_DIR]

#include <filesystem>
#include <iostream>
#include <vector>

#include "toricinv/fixture_io.hpp"
#include "transcribed.hpp"

using toricinv::MPoly;
using toricinv::PolyFixture;
using toricinv::Rat;

namespace {

MPoly times_V(const MPoly& v, long factor) { return MPoly(Rat(factor)) * v; }

std::vector<PolyFixture> all_fixtures() {
    namespace tr = transcribed;
    MPoly V2 = tr::dp2_V();
    MPoly V3 = tr::dp3_V();
    return {
        {"dp2_V", 0, V2},
        {"dp2_F1_num", 0, tr::dp2_F1_num()},
        {"dp2_F1_den", 0, V2},
        {"dp2_F2_num", 0, tr::dp2_F2_num()},
        {"dp2_F2_den", 0, V2},
        {"dp2_A_num", 0, tr::dp2_A_num()},
        {"dp2_A_den", 2, times_V(V2, 288)},
        {"dp2_B_num", 0, tr::dp2_B_num()},
        {"dp2_B_den", 2, times_V(V2, 288)},
        {"dp2_C_num", 0, tr::dp2_C_num()},
        {"dp2_C_den", 2, times_V(V2, 576)},
        {"dp2_calB_num", 0, tr::dp2_calB_num()},
        {"dp2_calB_den", 0, tr::dp2_calB_den()},
        {"dp2_up1_diff", 0, tr::dp2_up1_diff()},
        {"dp2_a_num", 2, tr::dp2_a_num()},
        {"dp2_a_den", 0, tr::dp2_master_den()},
        {"dp2_smin_num", 1, tr::dp2_smin_num()},
        {"dp2_smin_den", 0, tr::dp2_master_den()},
        {"dp3_V", 0, V3},
        {"dp3_F1_num", 0, tr::dp3_F1_num()},
        {"dp3_F1_den", 0, V3},
        {"dp3_F2_num", 0, tr::dp3_F2_num()},
        {"dp3_F2_den", 0, V3},
        {"dp3_A_num", 0, tr::dp3_A_num()},
        {"dp3_A_den", 2, times_V(V3, 288)},
        {"dp3_B_num", 0, tr::dp3_B_num()},
        {"dp3_B_den", 2, times_V(V3, 288)},
        {"dp3_C_num", 0, tr::dp3_C_num()},
        {"dp3_C_den", 2, times_V(V3, 576)},
        {"dp3_up2_diff", 0, tr::dp3_up2_diff()},
        {"dp3_vertex_num", 1, tr::dp3_vertex_num()},
        {"dp3_vertex_den", 0, tr::dp3_master_den()},
    };
}

} // namespace

int main(int argc, char** argv) {
    std::filesystem::path dir = (argc > 1) ? argv[1] : "fixtures";
    std::filesystem::create_directories(dir);
    for (const auto& fx : all_fixtures()) {
        toricinv::write_fixture((dir / (fx.name + ".json")).string(), fx);
        std::cout << fx.name << ": " << fx.poly.num_terms() << " terms\n";
    }
    return 0;
}
