#include "levymax/golden.hpp"

#include <cstdio>

#include "levymax/error.hpp"

namespace levymax {

namespace {

const std::vector<double> kA1 = {-0.075, -0.05, -0.025, 0.0, 0.025};
const std::vector<double> kA2 = {0.025, 0.05, 0.075, 0.1, 0.175};

using Block = double[5][5];

const Block kTable1 = {
    {0.0528532412024316, 0.0649856679446115, 0.0879014169039594, 0.506498701211732, 0.923417160799499},
    {0.0533971065051705, 0.0656207900757611, 0.088669961239051, 0.507497961893707, 0.925278586629321},
    {0.0536378889312989, 0.0658957955144874, 0.0889908892581364, 0.50788584329118, 0.925781540582069},
    {0.0537738608706033, 0.0660488001673674, 0.0891656084917816, 0.508089681056682, 0.926027783268806},
    {0.0539603399744032, 0.0662551510091744, 0.0893960371866527, 0.508350135593748, 0.92632726895684}};

const Block kTable1A = {{-1.3e-08, -1.4e-08, -2.0e-08, 1.6e-05, 1.5e-08},
                        {-1.4e-08, -1.4e-08, -1.9e-08, 3.5e-05, 1.0e-08},
                        {-1.4e-08, -1.4e-08, -1.8e-08, -2.7e-05, 1.0e-08},
                        {-1.4e-08, -1.3e-08, -1.7e-08, -6.9e-06, 1.0e-08},
                        {-1.3e-08, -1.3e-08, -1.6e-08, -7.1e-07, 1.1e-08}};

const Block kTable1B = {{6.9e-11, 4.6e-11, 6.1e-11, 9.5e-08, 4.5e-09},
                        {4.67e-11, 1.9e-11, 2.7e-11, 9.5e-08, 2.5e-09},
                        {3.8e-11, 9.2e-12, 1.6e-11, 9.5e-08, 2.5e-09},
                        {3.7e-11, 8.6e-12, 1.5e-11, 9.5e-08, 2.5e-09},
                        {3.3e-11, 3.9e-12, 9.7e-12, 9.5e-08, 2.5e-09}};

const Block kTable2A = {{2.6e-07, 2.3e-06, -1.1e-06, -3.1e-06, 4.0e-06},
                        {1.5e-06, 3.9e-06, -4.9e-06, 2.6e-07, 2.4e-06},
                        {2.1e-06, 4.8e-06, 1.9e-07, -1.4e-07, 4.1e-07},
                        {1.7e-06, 4.6e-06, -1.7e-05, -1.5e-08, 3.6e-06},
                        {1.9e-06, 5.3e-06, -6.7e-06, 6.5e-09, 3.2e-06}};

const Block kTable2B = {{5.3e-09, 7.5e-09, 1.1e-08, 1.6e-08, 2.8e-08},
                        {1.7e-09, 2.3e-09, 3.3e-09, 5.3e-09, 8.0e-09},
                        {6.3e-10, 8.3e-10, 1.3e-09, 8.1e-10, 9.6e-10},
                        {2.6e-10, 3.4e-10, 4.5e-10, 5.6e-10, 4.1e-10},
                        {3.5e-11, 4.3e-11, 5.2e-11, 2.5e-10, 1.4e-10}};

const double kTable3T[5] = {0.05, 0.25, 1.0, 5.0, 15.0};

const Block kTable3[5] = {
    {{0.0426345508873718, 0.0758341778428274, 0.176479681837557, 0.493783805726552, 0.76399258839732},
     {0.0446956827465834, 0.0789187973252002, 0.181782048757841, 0.506036792145469, 0.825492125538671},
     {0.0450873920315921, 0.079458899594002, 0.182586511426248, 0.507408036688672, 0.828608126596909},
     {0.0452106318743183, 0.0796204107687271, 0.182808929783218, 0.507738655589658, 0.829169593624407},
     {0.0452978231524441, 0.0797292390171655, 0.182948969868149, 0.507926759921863, 0.829439308709987}},
    {{0.163806126424503, 0.222533168794254, 0.292815888435677, 0.358988211793687, 0.393398675917049},
     {0.197831466772809, 0.270940241301468, 0.364113238782974, 0.465880513837506, 0.552855276262823},
     {0.209526961250121, 0.287054894532268, 0.387393027996113, 0.501316508355731, 0.609524332900865},
     {0.214159056436717, 0.293191765138545, 0.395866562093269, 0.513635238184172, 0.628571055479703},
     {0.217748710666063, 0.297727492839728, 0.401770665632438, 0.521618850122037, 0.639907339969623}},
    {{0.178941818286114, 0.190289038594875, 0.199647908813292, 0.206347351121367, 0.209437388152747},
     {0.260426736227358, 0.280223680907225, 0.29788417893014, 0.312420272173741, 0.322811896989456},
     {0.313477022993733, 0.340285459289499, 0.365414405617852, 0.387710627803938, 0.405984471788573},
     {0.348622321432066, 0.380779386234454, 0.411911217215892, 0.440836201412271, 0.466304790550708},
     {0.397364133265805, 0.437693401916372, 0.478455631551985, 0.518663398654916, 0.55725449371475}},
    {{0.111436716966636, 0.112239673751285, 0.112868052194392, 0.113305936381633, 0.113508446236642},
     {0.260426736227358, 0.280223680907225, 0.29788417893014, 0.312420272173741, 0.322811896989456},
     {0.313477022993733, 0.340285459289499, 0.365414405617852, 0.387710627803938, 0.405984471788573},
     {0.348622321432066, 0.380779386234454, 0.411911217215892, 0.440836201412271, 0.466304790550708},
     {0.368564902845242, 0.374400775302313, 0.379792301029147, 0.384713109733035, 0.389137993602727}},
    {{0.083599231183863, 0.083725522194071, 0.0838241629685378, 0.0838929695457668, 0.0839249287233805},
     {0.130217710987261, 0.130456839782095, 0.130654399607263, 0.130808705570046, 0.13091634106018},
     {0.169363038877019, 0.169728032397852, 0.170040043384744, 0.170297815998657, 0.170499151715123},
     {0.204270598983103, 0.204774983963964, 0.205216260776888, 0.205593481299844, 0.205905127535884},
     {0.293472724302235, 0.294468206269081, 0.295374834640356, 0.296192060853885, 0.296919211526691}}};

std::string where(const char* table, const char* block, int r, int c) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s%s, row a2=%g, column a1=%g", table, block, kA2[r], kA1[c]);
  return buf;
}

GoldenTable build1() {
  GoldenTable g;
  g.id = 1;
  g.title = "Joint cpdf, KoBoL nu=0.2 (close to VG), T=0.25";
  g.nu = 0.2;
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c) {
      GoldenCell cell;
      cell.T = 0.25;
      cell.a1 = kA1[c];
      cell.a2 = kA2[r];
      cell.value = kTable1[r][c];
      cell.err_gwr = kTable1A[r][c];
      cell.err_sinh = kTable1B[r][c];
      cell.provenance = where("Table 1", "", r, c);
      g.cells.push_back(cell);
    }
  return g;
}

GoldenTable build2() {
  GoldenTable g;
  g.id = 2;
  g.title = "Errors, KoBoL nu=1.2 (close to NIG), T=0.25";
  g.nu = 1.2;
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c) {
      GoldenCell cell;
      cell.T = 0.25;
      cell.a1 = kA1[c];
      cell.a2 = kA2[r];
      cell.value = kTable3[1][r][c];
      cell.err_gwr = kTable2A[r][c];
      cell.err_sinh = kTable2B[r][c];
      cell.provenance = where("Table 2", " (values: Table 3, T=0.25 block)", r, c);
      g.cells.push_back(cell);
    }
  return g;
}

GoldenTable build3() {
  GoldenTable g;
  g.id = 3;
  g.title = "Joint cpdf, KoBoL nu=1.2 (close to NIG)";
  g.nu = 1.2;
  for (int b = 0; b < 5; ++b)
    for (int r = 0; r < 5; ++r)
      for (int c = 0; c < 5; ++c) {
        GoldenCell cell;
        cell.T = kTable3T[b];
        cell.a1 = kA1[c];
        cell.a2 = kA2[r];
        cell.value = kTable3[b][r][c];
        cell.tol = cell.T == 15.0 ? 1e-8 : 1e-9;
        // rows a2 = 0.05..0.1 of the T=5 block repeat the T=1 block
        cell.excluded = b == 3 && r >= 1 && r <= 3;
        char blk[32];
        std::snprintf(blk, sizeof blk, ", block T=%g", kTable3T[b]);
        cell.provenance = where("Table 3", blk, r, c);
        g.cells.push_back(cell);
      }
  return g;
}

}  // namespace

std::vector<GoldenCell> GoldenTable::active() const {
  std::vector<GoldenCell> out;
  for (const auto& c : cells)
    if (!c.excluded) out.push_back(c);
  return out;
}

const GoldenTable& golden_table(int id) {
  static const GoldenTable t1 = build1(), t2 = build2(), t3 = build3();
  switch (id) {
    case 1: return t1;
    case 2: return t2;
    case 3: return t3;
    default: fail(ErrorKind::user, "no golden table " + std::to_string(id));
  }
}

const std::vector<double>& golden_a1() { return kA1; }
const std::vector<double>& golden_a2() { return kA2; }

}  // namespace levymax
