"""Published reference values used by ``qme verify``."""

from fractions import Fraction

#: disk invariants N_d^disk of the quintic, odd d <= 29
DISK_N = {
    1: Fraction(30),
    3: Fraction(4600, 3),
    5: Fraction(5441256, 5),
    7: Fraction(47823842250, 49),
    9: Fraction(28973369597500, 27),
    11: Fraction(160812279574853640, 121),
    13: Fraction(301152359429255569200, 169),
    15: Fraction(2528247216911976710478),
    17: Fraction(1081454384062665012504422250, 289),
    19: Fraction(2066166201384849550431238897500, 361),
    21: Fraction(440336544802747748968402664543390, 49),
    23: Fraction(7625558614788648016004683159051585650, 529),
    25: Fraction(2942308498496733293257158606365620128756, 125),
    27: Fraction(9481608375404186315963625791852891724001750, 243),
    29: Fraction(55101515400393595065761084565358564820821590000, 841),
}

#: virtual disk counts n_d^disk, odd d <= 29
DISK_n = {
    1: 30,
    3: 1530,
    5: 1088250,
    7: 975996780,
    9: 1073087762700,
    11: 1329027103924410,
    13: 1781966623841748930,
    15: 2528247216911976589500,
    17: 3742056692258356444651980,
    19: 5723452081398475208950800270,
    21: 8986460098015260183028517362890,
    23: 14415044640432226873354788580437780,
    25: 23538467987973866346057268850924917500,
    27: 39018964507836157678862657579522297754750,
    29: 65519043282275380577599387116954298241167170,
}

#: lines on the quintic
LINES = 2875
