"""
snn_top.v
=========

Verilog top level: the SPI peripheral wired to the network's write port.
"""

FILENAME = "snn_top.v"

SNN_TOP_V = """\
// snn_top.v
// Chip top level. input_currents packs the three layer-1 currents,
// neuron k at input_currents[k*8 +: 8].

module snn_top (
    input  wire        clk,
    input  wire        rst,
    input  wire        sclk,
    input  wire        mosi,
    input  wire        cs_n,
    output wire        miso,
    input  wire [23:0] input_currents,
    output wire [2:0]  layer1_spikes,
    output wire [2:0]  layer2_spikes
);

    wire       wr_en;
    wire [7:0] wr_addr;
    wire [7:0] wr_data;

    spi_peripheral spi (
        .clk(clk),
        .rst(rst),
        .sclk(sclk),
        .mosi(mosi),
        .cs_n(cs_n),
        .miso(miso),
        .wr_en(wr_en),
        .wr_addr(wr_addr),
        .wr_data(wr_data)
    );

    snn_network network (
        .clk(clk),
        .rst(rst),
        .wr_en(wr_en),
        .wr_addr(wr_addr),
        .wr_data(wr_data),
        .input_currents(input_currents),
        .layer1_spikes(layer1_spikes),
        .layer2_spikes(layer2_spikes)
    );

endmodule
"""


def render() -> str:
    return SNN_TOP_V
