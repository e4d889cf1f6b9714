#include "mnseq/verify.hpp"

namespace mnseq {

// Golden rows for the two reference graphs, one tab-separated line per
// printed table row: word, row label (printed number + HPP name), kind,
// expected canonical rendering, status. Errata rows keep the printed text
// they disagree with. The 1221 gamma rows 3-4 are taken from the figure
// captions; the table cells truncate the final IES.
namespace {

const std::string kFixtureText = R"FIX(# word	row	kind	expected	status
1212	1 e2(1A, 2A)	gamma	I0 M1 I1 -M2 I2 -M3 I3	exact
1212	2 e2(1A, 2B)	gamma	I0 M1 I1 -M2 I2 M3 I3	exact
1212	3 e2(1B, 2B)	gamma	I0 -M1 I1 -M2 I2 M3 I3	exact
1212	4 e2(1B, 2A)	gamma	I0 -M1 I1 -M2 I2 -M3 I3	exact
1212	5 e3(1A, 2A)	gamma	I0 M1 I1 -M3 I2 M2 I3	exact
1212	6 e3(1A, 2B)	gamma	I0 M1 I1 M3 I2 M2 I3	exact
1212	7 e3(1B, 2A)	gamma	I0 -M1 I1 -M3 I2 M2 I3	exact
1212	8 e3(1B, 2B)	gamma	I0 -M1 I1 M3 I2 M2 I3	exact
1212	9 e1(1A, 2A)	gamma	I0 M2 I1 M1 I2 -M3 I3	exact
1212	10 e1(1A, 2B)	gamma	I0 M2 I1 M1 I2 M3 I3	exact
1212	11 e1(1B, 2A)	gamma	I0 M2 I1 -M1 I2 -M3 I3	exact
1212	12 e1(1B, 2B)	gamma	I0 M2 I1 -M1 I2 M3 I3	exact
1212	1 e2(1A, 2A)	gamma_r	I0 M3 I1 M2 I2 -M1 I3	exact
1212	2 e2(1A, 2B)	gamma_r	I0 -M3 I1 M2 I2 -M1 I3	exact
1212	3 e2(1B, 2B)	gamma_r	I0 -M3 I1 M2 I2 M1 I3	exact
1212	4 e2(1B, 2A)	gamma_r	I0 M3 I1 M2 I2 M1 I3	exact
1212	5 e3(1A, 2A)	gamma_r	I0 -M2 I1 M3 I2 -M1 I3	exact
1212	6 e3(1A, 2B)	gamma_r	I0 -M2 I1 -M3 I2 -M1 I3	exact
1212	7 e3(1B, 2A)	gamma_r	I0 -M2 I1 M3 I2 M1 I3	exact
1212	8 e3(1B, 2B)	gamma_r	I0 -M2 I1 -M3 I2 M1 I3	exact
1212	9 e1(1A, 2A)	gamma_r	I0 M3 I1 -M1 I2 -M2 I3	exact
1212	10 e1(1A, 2B)	gamma_r	I0 -M3 I1 -M1 I2 -M2 I3	exact
1212	11 e1(1B, 2A)	gamma_r	I0 M3 I1 M1 I2 -M2 I3	exact
1212	12 e1(1B, 2B)	gamma_r	I0 -M3 I1 M1 I2 -M2 I3	exact
1221	1 e1(1A, 2A)	gamma	I0 M2 I1 -M3 I2 M1 I3	exact
1221	2 e1(1A, 2B)	gamma	I0 M2 I1 M3 I2 M1 I3	exact
1221	3 e1(1B, 2A)	gamma	I0 M2 I1 -M3 I2 -M1 I3	exact
1221	4 e1(1B, 2B)	gamma	I0 M2 I1 M3 I2 -M1 I3	exact
1221	5 e3(1A, 2B)	gamma	I0 M1 I1 M3 I2 -M2 I3	exact
1221	6 e3(1A, 2A)	gamma	I0 M1 I1 -M3 I2 -M2 I3	exact
1221	7 e3(1B, 2A)	gamma	I0 -M1 I1 -M3 I2 -M2 I3	exact
1221	8 e3(1B, 2B)	gamma	I0 -M1 I1 M3 I2 -M2 I3	exact
1221	1 e1(1A, 2A)	gamma_r	I0 -M1 I1 M3 I2 -M2 I3	exact
1221	2 e1(1A, 2B)	gamma_r	I0 -M1 I1 -M3 I2 -M2 I3	exact
1221	3 e1(1B, 2A)	gamma_r	I0 M1 I1 M3 I2 -M2 I3	erratum(M1 I0 M3 I1 -M2 I2)
1221	4 e1(1B, 2B)	gamma_r	I0 M1 I1 -M3 I2 -M2 I3	erratum(M1 I0 -M3 I1 -M2 I2)
1221	5 e3(1A, 2B)	gamma_r	I0 M2 I1 -M3 I2 -M1 I3	exact
1221	6 e3(1A, 2A)	gamma_r	I0 M2 I1 M3 I2 -M1 I3	exact
1221	7 e3(1B, 2A)	gamma_r	I0 M2 I1 M3 I2 M1 I3	exact
1221	8 e3(1B, 2B)	gamma_r	I0 M2 I1 -M3 I2 M1 I3	exact
1221	1 e1(1A, 2A)	gamma_minus	I0 -M2 I1 M1 I2 -M3 I3	exact
1221	2 e1(1A, 2B)	gamma_minus	I0 -M2 I1 -M1 I2 -M3 I3	exact
1221	3 e1(1B, 2A)	gamma_minus	I0 -M2 I1 M1 I2 M3 I3	exact
1221	4 e1(1B, 2B)	gamma_minus	I0 -M2 I1 -M1 I2 M3 I3	exact
1221	1 e1(1A, 2A)	gamma_minus_r	I0 M3 I1 -M1 I2 M2 I3	exact
1221	2 e1(1A, 2B)	gamma_minus_r	I0 M3 I1 M1 I2 M2 I3	exact
1221	3 e1(1B, 2A)	gamma_minus_r	I0 -M3 I1 -M1 I2 M2 I3	exact
1221	4 e1(1B, 2B)	gamma_minus_r	I0 -M3 I1 M1 I2 M2 I3	exact
1212	1 e2(1A, 2A)	smoothing(1,N)	I0 M1,2 I1 -M3 I2	exact
1212	2 e2(1A, 2B)	smoothing(1,N)	I0 M1,2 I1 M3 I2	exact
1212	3 e2(1B, 2B)	smoothing(1,P)	I0 M3 I1 <-M2,1 I2>	cyclic-equivalent
1212	4 e2(1B, 2A)	smoothing(1,P)	I0 -M3 I1 <-M2,1 I2>	cyclic-equivalent
1212	5 e3(1A, 2A)	smoothing(1,P)	I0 M1,2 I1 <-M3 I2>	cyclic-equivalent
1212	6 e3(1A, 2B)	smoothing(1,P)	I0 M1,2 I1 <M3 I2>	cyclic-equivalent
1212	7 e3(1B, 2A)	smoothing(1,N)	I0 M3 I1 M1,2 I2	erratum(I0 M3,1,2 I1)
1212	8 e3(1B, 2B)	smoothing(1,N)	I0 -M3 I1 M1,2 I2	exact
1212	9 e1(1A, 2A)	smoothing(1,P)	I0 -M3 I1 <M1,2 I2>	cyclic-equivalent
1212	10 e1(1A, 2B)	smoothing(1,P)	I0 M3 I1 <M1,2 I2>	cyclic-equivalent
1212	11 e1(1B, 2A)	smoothing(1,N)	I0 -M2,1 I1 -M3 I2	erratum(I0 -M2,1,3 I1)
1212	12 e1(1B, 2B)	smoothing(1,N)	I0 -M2,1 I1 M3 I2	exact
1212	1 e2(1A, 2A)	smoothing(2,P)	I0 M1 I1 <-M3,2 I2>	cyclic-equivalent
1212	2 e2(1A, 2B)	smoothing(2,N)	I0 M1 I1 M2,3 I2	exact
1212	3 e2(1B, 2B)	smoothing(2,N)	I0 -M1 I1 M2,3 I2	exact
1212	4 e2(1B, 2A)	smoothing(2,P)	I0 -M1 I1 <-M3,2 I2>	cyclic-equivalent
1212	5 e3(1A, 2A)	smoothing(2,N)	I0 M1 I1 -M3,2 I2	exact
1212	6 e3(1A, 2B)	smoothing(2,P)	I0 M1 I1 <M2,3 I2>	cyclic-equivalent
1212	7 e3(1B, 2A)	smoothing(2,N)	I0 -M1 I1 -M3,2 I2	erratum(I0 -M1,3,2 I1)
1212	8 e3(1B, 2B)	smoothing(2,P)	I0 -M1 I1 <M2,3 I2>	cyclic-equivalent
1212	9 e1(1A, 2A)	smoothing(2,N)	I0 M2,3 I1 -M1 I2	exact
1212	10 e1(1A, 2B)	smoothing(2,P)	I0 M2,3 I1 <M1 I2>	cyclic-equivalent
1212	11 e1(1B, 2A)	smoothing(2,N)	I0 M2,3 I1 M1 I2	erratum(I0 M2,3,1 I1)
1212	12 e1(1B, 2B)	smoothing(2,P)	I0 M2,3 I1 <-M1 I2>	cyclic-equivalent
1221	1 e1(1A, 2A)	smoothing(1,P)	I0 <M1,2 I1 -M3 I2>	cyclic-equivalent
1221	2 e1(1A, 2B)	smoothing(1,P)	I0 <M1,2 I1 M3 I2>	cyclic-equivalent
1221	3 e1(1B, 2A)	smoothing(1,N)	I0 M3 I1 -M2,1 I2	exact
1221	4 e1(1B, 2B)	smoothing(1,N)	I0 -M3 I1 -M2,1 I2	exact
1221	5 e3(1A, 2B)	smoothing(1,N)	I0 M1,2 I1 -M3 I2	exact
1221	6 e3(1A, 2A)	smoothing(1,N)	I0 M1,2 I1 M3 I2	exact
1221	7 e3(1B, 2A)	smoothing(1,P)	I0 <-M2,1 I1 -M3 I2>	erratum(I0 -M2,1,3 I1)
1221	8 e3(1B, 2B)	smoothing(1,P)	I0 <-M2,1 I1 M3 I2>	cyclic-equivalent
1221	1 e1(1A, 2A)	smoothing(2,N)	I0 M2,3 I1 M1 I2	exact
1221	2 e1(1A, 2B)	smoothing(2,P)	I0 M2,3 I1 M1 I2 <I3>	cyclic-equivalent
1221	3 e1(1B, 2A)	smoothing(2,N)	I0 M2,3 I1 -M1 I2	exact
1221	4 e1(1B, 2B)	smoothing(2,P)	I0 M2,3 I1 -M1 I2 <I3>	cyclic-equivalent
1221	5 e3(1A, 2B)	smoothing(2,N)	I0 M1 I1 -M3,2 I2	exact
1221	6 e3(1A, 2A)	smoothing(2,P)	I0 M1 I1 -M3,2 I2 <I3>	cyclic-equivalent
1221	7 e3(1B, 2A)	smoothing(2,P)	I0 -M1 I1 -M3,2 I2 <I3>	cyclic-equivalent
1221	8 e3(1B, 2B)	smoothing(2,N)	I0 -M1 I1 -M3,2 I2	exact
1212	-	count	24	exact
1221	-	count	16	exact
)FIX";

}  // namespace

const std::string& fixture_text() { return kFixtureText; }

}  // namespace mnseq
